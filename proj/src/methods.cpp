#include "asymclust/methods.hpp"

#include <algorithm>

#include "asymclust/paths.hpp"

namespace asymclust {

std::optional<MethodId> parse_method(std::string_view name) {
  if (name == "single-linkage" || name == "single_linkage") return MethodId::single_linkage;
  if (name == "reciprocal") return MethodId::reciprocal;
  if (name == "nonreciprocal") return MethodId::nonreciprocal;
  if (name == "unilateral") return MethodId::unilateral;
  return std::nullopt;
}

std::string method_name(MethodId m) {
  switch (m) {
    case MethodId::single_linkage: return "single-linkage";
    case MethodId::reciprocal: return "reciprocal";
    case MethodId::nonreciprocal: return "nonreciprocal";
    case MethodId::unilateral: return "unilateral";
  }
  return "?";
}

Ultrametric single_linkage(const Network& net) {
  if (!is_symmetric(net)) {
    throw Error(errc::not_symmetric, "single linkage requires a symmetric network");
  }
  return Ultrametric::unchecked(net.labels(), min_chain_cost(net));
}

Ultrametric reciprocal(const Network& net) { return single_linkage(max_symmetrize(net)); }

Ultrametric nonreciprocal(const Network& net) {
  const MinChainCostMatrix costs = min_chain_cost(net);
  const std::size_t n = net.size();
  SquareMatrix values(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Value v = std::max(costs(i, j), costs(j, i));
      values(i, j) = v;
      values(j, i) = v;
    }
  return Ultrametric::unchecked(net.labels(), std::move(values));
}

Ultrametric unilateral(const Network& net) { return single_linkage(min_symmetrize(net)); }

Ultrametric cluster(MethodId method, const Network& net) {
  switch (method) {
    case MethodId::single_linkage: return single_linkage(net);
    case MethodId::reciprocal: return reciprocal(net);
    case MethodId::nonreciprocal: return nonreciprocal(net);
    case MethodId::unilateral: return unilateral(net);
  }
  throw Error(errc::bad_params, "unknown method");
}

}  // namespace asymclust
