/* orbit.hpp -- forward orbits of ξ (or any group element) on infinite binary words.
 *
 * Iterates are computed one step at a time from the previous iterate. The
 * orbit of 1^ω is the central object: with 1^ω ξ^k = u_k x_k and |u_k| = n,
 * the prefixes u_1 .. u_{2^n} run through every word of length n once.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "b4/generators.hpp"
#include "b4/mealy.hpp"
#include "b4/report.hpp"
#include "b4/words.hpp"

namespace b4 {

/// Step-by-step orbit of a point under a fixed element.
class Orbit {
public:
    explicit Orbit(UPWord start, const GroupWord& element);
    /// The orbit under ξ.
    explicit Orbit(UPWord start);

    const UPWord& current() const { return current_; }
    std::uint64_t index() const { return index_; }
    const UPWord& advance();

private:
    InitialMachine element_;
    UPWord current_;
    std::uint64_t index_ = 0;
};

/// x ξ^k.
UPWord iterate(const UPWord& x, std::uint64_t k);
/// x w^k.
UPWord iterate(const GroupWord& w, const UPWord& x, std::uint64_t k);

/// k, the first n letters of x ξ^k, and the rest.
struct OrbitRecord {
    std::uint64_t k;
    FiniteWord prefix;
    UPWord tail;

    /// "k,u_k,x_k".
    std::string csv() const;
};

/// Records for k = 1..steps of the orbit of start under ξ, split after n letters.
std::vector<OrbitRecord> orbit_records(const UPWord& start, std::uint64_t steps, std::size_t n);

/// Sweep of k = 1..2^n from 1^ω: 0 occurs in u_k for k < 2^n; the u_k exhaust {0,1}^n;
/// x_k = 1^ω below 2^(n-1) and 01^ω from 2^(n-1) up to 2^n - 1; and 1^ω ξ^(2^n) = 1^n 00 1^ω.
/// n in [1, 30].
Report verify_xi_sweep(std::size_t n);

struct WitnessReport {
    std::string target;
    bool found = false;
    /// The iterate index that achieved the approximation.
    std::uint64_t index = 0;
    /// Distance actually achieved, and the strict bound it had to beat.
    Dyadic achieved = Dyadic::zero();
    Dyadic bound = Dyadic::zero();
    std::uint64_t iterations = 0;
    /// The starting point z of the transitivity witness (z = x).
    std::optional<UPWord> start;

    std::string describe() const;
};

/// First k in [1, 2^m] with the m-prefix of start ξ^k equal to that of target; the
/// achieved distance is then below 2^-(m-1). Not finding one is reported with found = false.
WitnessReport density_witness(const UPWord& start, const UPWord& target, std::size_t m);

/// z = x and n with d(x ξ^n, y) < 2^-eps_exp, via density_witness with m = eps_exp + 1.
WitnessReport transitivity_witness(const UPWord& x, const UPWord& y, std::size_t eps_exp);

/// d(x w^n, y w^n) <= d(x, y) for all n <= n_max, compared exactly.
Report lipschitz_check(const GroupWord& w, const UPWord& x, const UPWord& y, std::uint64_t n_max);

}  // namespace b4
