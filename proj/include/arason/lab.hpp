#ifndef ARASON_LAB_HPP_
#define ARASON_LAB_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "arason/json_io.hpp"
#include "arason/unitary.hpp"

namespace arason::lab {

std::vector<SquareClass> default_delta_pool();

struct GenConfig {
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    long height_bound = 30;  // max |squarefree part| of generated entries
    std::vector<SquareClass> delta_pool = default_delta_pool();
    std::vector<std::size_t> degrees;  // empty: the check's default degrees
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Deterministic source of random instances.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::size_t index(std::size_t n);
    long range(long lo, long hi);  // inclusive
    bool coin(double p = 0.5);
    /// Uniform over nonzero squarefree integers in [-bound, bound].
    long squarefree(long bound);
    SquareClass square_class(long bound) { return SquareClass::of(squarefree(bound)); }
    template <class T> T const& pick(std::vector<T> const& v) { return v[index(v.size())]; }
    template <class T> void shuffle(std::vector<T>& v) { std::shuffle(v.begin(), v.end(), eng_); }

  private:
    std::mt19937_64 eng_;
};

std::vector<HermForm> gen_herm(GenConfig const& cfg, HermContext const& ctx, std::size_t rank);

/// Pairs with equal discriminant algebras (equal d(h) up to norms when n is even).
std::vector<std::pair<UnitaryInv, UnitaryInv>> gen_matched_pair(GenConfig const& cfg, HermContext const& ctx,
                                                                 std::size_t n);

struct Failure {
    std::size_t trial = 0;
    Json instance;
    std::string message;
};

struct CheckReport {
    std::string check;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<Failure> failures;
    double elapsed_ms = 0;
    std::map<std::string, std::size_t> stats;

    bool passed() const { return failures.empty(); }
    std::size_t stat(std::string const& key) const;
};

Json to_json(CheckReport const& r, bool include_timing = true);

std::vector<std::string> const& check_names();
bool is_check(std::string const& name);

/// Runs cfg.trials generated instances through the named law. Throws std::invalid_argument on unknown names.
CheckReport run_check(std::string const& name, GenConfig const& cfg);

/// Re-evaluates one serialized instance; returns the failure message, if any.
std::optional<std::string> replay(std::string const& name, Json const& instance);

/// Greedy replacement of integer entries by +-1, +-2, +-3 while the failure persists.
Json minimize(std::string const& name, Json instance);

/// Ground truth for ternary isotropy: Legendre reduction plus search inside Holzer's bounds.
bool holzer_isotropic(long a, long b, long c);

}  // namespace arason::lab

#endif  // ARASON_LAB_HPP_
