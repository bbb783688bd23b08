#pragma once

// Data-parallel kernels. Every kernel has a serial reference implementation
// and an OpenMP one; both return identical, deterministically ordered results.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "eqcoh/coefficient_rings.hpp"
#include "eqcoh/root_system.hpp"

namespace eqcoh::kernels {

enum class Exec { serial, parallel };

/// Bruhat covers (u, v) among `elements` (group indices): u < v and l(v) = l(u) + 1.
/// Returned as positions into `elements`, sorted.
std::vector<std::pair<std::size_t, std::size_t>> bruhat_covers(const WeylGroup& weyl,
                                                               std::span<const std::size_t> elements,
                                                               Exec exec = Exec::parallel);

/// Union of the Weyl orbits of `dominant` (coroot coordinates), one vector per input.
std::vector<std::vector<Coweight>> coweight_orbits(const WeylGroup& weyl, std::span<const Coweight> dominant,
                                                   Exec exec = Exec::parallel);

/// Euler class of each multiset.
std::vector<RingElement> euler_batch(Theory theory, std::span<const std::vector<Weight>> multisets, std::size_t rank,
                                     const FormalGroupLaw& fgl, Exec exec = Exec::parallel);

namespace serial {
std::vector<std::pair<std::size_t, std::size_t>> bruhat_covers(const WeylGroup&, std::span<const std::size_t>);
std::vector<std::vector<Coweight>> coweight_orbits(const WeylGroup&, std::span<const Coweight>);
std::vector<RingElement> euler_batch(Theory, std::span<const std::vector<Weight>>, std::size_t,
                                     const FormalGroupLaw&);
}  // namespace serial

namespace parallel {
std::vector<std::pair<std::size_t, std::size_t>> bruhat_covers(const WeylGroup&, std::span<const std::size_t>);
std::vector<std::vector<Coweight>> coweight_orbits(const WeylGroup&, std::span<const Coweight>);
std::vector<RingElement> euler_batch(Theory, std::span<const std::vector<Weight>>, std::size_t,
                                     const FormalGroupLaw&);
}  // namespace parallel

/// Orbit of one coweight under the simple reflections, sorted.
std::vector<Coweight> coweight_orbit(const WeylGroup& weyl, const Coweight& lam);

}  // namespace eqcoh::kernels
