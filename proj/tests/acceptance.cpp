// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "arason/lab.hpp"

using namespace arason;
using namespace arason::lab;

namespace {

struct Result {
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<Result()> body;
};

std::string summary(CheckReport const& r)
{
    std::ostringstream os;
    os << r.check << " trials=" << r.trials << " failures=" << r.failures.size();
    if (!r.failures.empty())
        os << " first=" << r.failures.front().instance.dump() << " (" << r.failures.front().message << ")";
    return os.str();
}

Result run_checks(std::vector<std::pair<std::string, GenConfig>> const& runs,
                  std::function<void(CheckReport const&, Result&)> const& extra = {})
{
    Result res;
    for (auto const& [name, cfg] : runs) {
        CheckReport r = run_check(name, cfg);
        if (!r.passed())
            res.ok = false;
        if (extra)
            extra(r, res);
        res.detail += (res.detail.empty() ? "" : "; ") + summary(r);
    }
    return res;
}

GenConfig config(std::uint64_t seed, std::size_t trials, std::vector<std::size_t> degrees = {}, long height = 30)
{
    GenConfig c;
    c.seed = seed;
    c.trials = trials;
    c.degrees = std::move(degrees);
    c.height_bound = height;
    return c;
}

Result holzer_sweep()
{
    std::vector<long> sf;
    for (long v = -50; v <= 50; ++v)
        if (v != 0 && SquareClass::of(v).representative() == v)
            sf.push_back(v);
    std::size_t forms = 0, isotropic = 0, mismatches = 0;
    std::string first;
    for (std::size_t i = 0; i < sf.size(); ++i)
        for (std::size_t j = i; j < sf.size(); ++j)
            for (std::size_t k = j; k < sf.size(); ++k) {
                ++forms;
                bool truth = holzer_isotropic(sf[i], sf[j], sf[k]);
                isotropic += truth;
                if (is_isotropic(QuadForm::of({sf[i], sf[j], sf[k]})) != truth) {
                    ++mismatches;
                    if (first.empty())
                        first = "<" + std::to_string(sf[i]) + "," + std::to_string(sf[j]) + "," +
                                std::to_string(sf[k]) + ">";
                }
            }
    Result r;
    r.ok = mismatches == 0;
    r.detail = "forms=" + std::to_string(forms) + " isotropic=" + std::to_string(isotropic) +
               " mismatches=" + std::to_string(mismatches) + (first.empty() ? "" : " first=" + first);
    return r;
}

}  // namespace

int main()
{
    std::vector<Criterion> criteria{
        {1, "Hilbert reciprocity, 10^4 pairs of height <= 10^6", 10,
         [] { return run_checks({{"reciprocity", config(1, 10000, {}, 1000000)}}); }},
        {2, "e3 of 3-fold Pfister forms equals the symbol, 10^3 triples", 5,
         [] { return run_checks({{"e3_pfister", config(2, 1000, {}, 1000)}}); }},
        {3, "isotropy agrees with Holzer-bounded search on all squarefree ternaries in [-50,50]", 60, holzer_sweep},
        {4, "relative invariant unchanged by rescaling representatives, 500 per degree 3,4,6,8", 30,
         [] {
             return run_checks({{"rescale", config(4, 500, {3})},
                                {"rescale", config(4, 500, {4})},
                                {"rescale", config(4, 500, {6})},
                                {"rescale", config(4, 500, {8})}});
         }},
        {5, "cocycle relation, symmetry and 2-torsion, 500 per degree 4,6,8", 60,
         [] {
             std::vector<std::pair<std::string, GenConfig>> runs;
             for (std::size_t n : {4, 6, 8}) {
                 runs.push_back({"chasles", config(5, 500, {n})});
                 runs.push_back({"order2", config(5, 500, {n})});
             }
             return run_checks(runs);
         }},
        {6, "orthogonal-sum formula and difference law, 300 even-degree pairs", 60,
         [] { return run_checks({{"theta_sum", config(6, 300, {2, 4, 6, 8})}}); }},
        {7, "rank-2 factor formula, 300 instances on degree 2 and 4 bases", 30,
         [] { return run_checks({{"rank2", config(7, 300, {2, 4})}}); }},
        {8, "degree-4 classification biconditional, 500 pairs, each outcome >= 50", 120,
         [] {
             return run_checks({{"deg4_classify", config(8, 500)}}, [](CheckReport const& r, Result& res) {
                 std::size_t iso = r.stat("isomorphic"), non = r.stat("non_isomorphic");
                 if (iso < 50 || non < 50)
                     res.ok = false;
                 res.detail += "isomorphic=" + std::to_string(iso) + " non_isomorphic=" + std::to_string(non) + " ";
             });
         }},
        {9, "degree-6 classification and hyperbolicity, 500 instances each", 120,
         [] {
             return run_checks({{"deg6_classify", config(9, 500)}, {"deg6_hyperbolic", config(9, 500)}});
         }},
        {10, "degree-8 decomposability decision, 300 instances, no missing witnesses", 300,
         [] {
             return run_checks({{"deg8_td", config(10, 300)}}, [](CheckReport const& r, Result& res) {
                 std::size_t missing = r.stat("witness_not_found");
                 if (missing != 0 || r.stat("constructed:false") != 0 || r.stat("obstructed:true") != 0)
                     res.ok = false;
                 res.detail += "witness_not_found=" + std::to_string(missing) +
                               " constructed_true=" + std::to_string(r.stat("constructed:true")) +
                               " obstructed_false=" + std::to_string(r.stat("obstructed:false")) + " ";
             });
         }},
        {11, "orthogonal and symplectic descent two-path agreement, 300 each", 60,
         [] {
             return run_checks({{"orth_descent", config(11, 300)}, {"symp_descent", config(11, 300)}});
         }},
        {12, "trace-form discriminant and Clifford predictions, 500 forms of ranks 1-8", 30,
         [] { return run_checks({{"quad_ext", config(12, 500, {1, 2, 3, 4, 5, 6, 7, 8})}}); }},
        {13, "f3 vanishes on every generated pair", 10,
         [] { return run_checks({{"f3_zero", config(13, 2000, {2, 3, 4, 5, 6, 7, 8})}}); }},
    };

    int failed = 0;
    for (auto const& c : criteria) {
        auto start = Clock::now();
        Result r;
        try {
            r = c.body();
        } catch (std::exception const& e) {
            r.ok = false;
            r.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        bool in_time = secs < c.budget_s;
        bool pass = r.ok && in_time;
        failed += !pass;
        std::printf("%s criterion %d: %s [%.2fs / %.0fs budget%s] %s\n", pass ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), secs, c.budget_s, in_time ? "" : ", over budget", r.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
