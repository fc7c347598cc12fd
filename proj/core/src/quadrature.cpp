#include "platewave/quadrature.hpp"

#include "platewave/types.hpp"

#include <string>

namespace platewave {

namespace {

// Nodes and weights on [0,1], symmetric rules stored in full.

const QuadratureRule1D kGauss[8] = {
    {{0.5}, {1.0}},
    {{0.2113248654051871177454256, 0.7886751345948128822545744}, {0.5, 0.5}},
    {{0.1127016653792583114820735, 0.5, 0.8872983346207416885179265},
     {0.2777777777777777777777778, 0.4444444444444444444444444, 0.2777777777777777777777778}},
    {{0.06943184420297371238802676, 0.3300094782075718675986671, 0.6699905217924281324013329,
      0.9305681557970262876119732},
     {0.1739274225687269286865320, 0.3260725774312730713134680, 0.3260725774312730713134680,
      0.1739274225687269286865320}},
    {{0.04691007703066800360118656, 0.2307653449471584544818428, 0.5, 0.7692346550528415455181572,
      0.9530899229693319963988134},
     {0.1184634425280945437571320, 0.2393143352496832340206458, 0.2844444444444444444444444,
      0.2393143352496832340206458, 0.1184634425280945437571320}},
    {{0.03376524289842398609384922, 0.1693953067668677431693002, 0.3806904069584015456847491,
      0.6193095930415984543152509, 0.8306046932331322568306998, 0.9662347571015760139061508},
     {0.08566224618958517252014807, 0.1803807865240693037849168, 0.2339569672863455236949352,
      0.2339569672863455236949352, 0.1803807865240693037849168, 0.08566224618958517252014807}},
    {{0.02544604382862073773690516, 0.1292344072003027800680676, 0.2970774243113014165466968, 0.5,
      0.7029225756886985834533032, 0.8707655927996972199319324, 0.9745539561713792622630948},
     {0.06474248308443484663530572, 0.1398526957446383339507339, 0.1909150252525594724751849,
      0.2089795918367346938775510, 0.1909150252525594724751849, 0.1398526957446383339507339,
      0.06474248308443484663530572}},
    {{0.01985507175123188415821957, 0.1016667612931866302042230, 0.2372337950418355070911305,
      0.4082826787521750975302619, 0.5917173212478249024697381, 0.7627662049581644929088695,
      0.8983332387068133697957770, 0.9801449282487681158417804},
     {0.05061426814518812957626568, 0.1111905172266872352721780, 0.1568533229389436436689811,
      0.1813418916891809914825752, 0.1813418916891809914825752, 0.1568533229389436436689811,
      0.1111905172266872352721780, 0.05061426814518812957626568}},
};

const QuadratureRule1D kLobatto[7] = {
    {{0.0, 1.0}, {0.5, 0.5}},
    {{0.0, 0.5, 1.0},
     {0.1666666666666666666666667, 0.6666666666666666666666667, 0.1666666666666666666666667}},
    {{0.0, 0.2763932022500210303590826, 0.7236067977499789696409174, 1.0},
     {0.08333333333333333333333333, 0.4166666666666666666666667, 0.4166666666666666666666667,
      0.08333333333333333333333333}},
    {{0.0, 0.1726731646460114281008538, 0.5, 0.8273268353539885718991462, 1.0},
     {0.05, 0.2722222222222222222222222, 0.3555555555555555555555556, 0.2722222222222222222222222,
      0.05}},
    {{0.0, 0.1174723380352676535744985, 0.3573842417596774518429245, 0.6426157582403225481570755,
      0.8825276619647323464255015, 1.0},
     {0.03333333333333333333333333, 0.1892374781489234901583064, 0.2774291885177431765083603,
      0.2774291885177431765083603, 0.1892374781489234901583064, 0.03333333333333333333333333}},
    {{0.0, 0.08488805186071653506398389, 0.2655756032646428930981141, 0.5,
      0.7344243967353571069018859, 0.9151119481392834649360161, 1.0},
     {0.02380952380952380952380952, 0.1384130236807829740053502, 0.2158726906049313117089355,
      0.2438095238095238095238095, 0.2158726906049313117089355, 0.1384130236807829740053502,
      0.02380952380952380952380952}},
    {{0.0, 0.06412992574519669233127712, 0.2041499092834288489277446, 0.3953503910487605656156714,
      0.6046496089512394343843286, 0.7958500907165711510722554, 0.9358700742548033076687229, 1.0},
     {0.01785714285714285714285714, 0.1053521135717530196914960, 0.1705613462417521823821203,
      0.2062293973293519407835265, 0.2062293973293519407835265, 0.1705613462417521823821203,
      0.1053521135717530196914960, 0.01785714285714285714285714}},
};

}  // namespace

QuadratureRule1D gauss_legendre(int n) {
  if (n < 1 || n > 8)
    throw ConfigError("gauss_legendre: unsupported point count " + std::to_string(n));
  return kGauss[n - 1];
}

QuadratureRule1D gauss_lobatto(int n) {
  if (n < 2 || n > 8)
    throw ConfigError("gauss_lobatto: unsupported point count " + std::to_string(n));
  return kLobatto[n - 2];
}

QuadratureRule2D tensorize(const QuadratureRule1D& rule) {
  QuadratureRule2D out;
  out.points.reserve(static_cast<std::size_t>(rule.size()) * rule.size());
  for (int j = 0; j < rule.size(); ++j)
    for (int i = 0; i < rule.size(); ++i)
      out.points.push_back({rule.nodes[i], rule.nodes[j], rule.weights[i] * rule.weights[j]});
  return out;
}

}  // namespace platewave
