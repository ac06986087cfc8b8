#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "asymclust/network.hpp"
#include "asymclust/ultrametric.hpp"

namespace asymclust {

enum class MethodId {
  single_linkage,
  reciprocal,
  nonreciprocal,
  unilateral,
};

/// Parses "single-linkage"/"single_linkage", "reciprocal",
/// "nonreciprocal", "unilateral".
std::optional<MethodId> parse_method(std::string_view name);
std::string method_name(MethodId m);

/// Single linkage: u(x,x') is the directed minimum chain cost, which is
/// symmetric on symmetric inputs. Only defined for symmetric networks;
/// throws Error(not_symmetric) otherwise.
Ultrametric single_linkage(const Network& net);

/// Reciprocal clustering: single linkage over the max-symmetrized
/// network, i.e. chains whose links are cheap in both directions. The
/// maximal admissible method.
Ultrametric reciprocal(const Network& net);

/// Nonreciprocal clustering: u(x,x') = max(mcc(x,x'), mcc(x',x)) --
/// possibly different chains in the two directions. The minimal
/// admissible method.
Ultrametric nonreciprocal(const Network& net);

/// Unilateral clustering: single linkage over the min-symmetrized
/// network; influence in one direction suffices. The unique method under
/// the min-valued two-node axiom.
Ultrametric unilateral(const Network& net);

/// Dispatcher. single_linkage on an asymmetric network throws
/// Error(not_symmetric).
Ultrametric cluster(MethodId method, const Network& net);

}  // namespace asymclust
