#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "check.hpp"
#include "poly.hpp"

namespace skewhopf {

struct SkewError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExhausted : SkewError {
    explicit BudgetExhausted(long long limit)
        : SkewError("rewrite budget exhausted (" + std::to_string(limit) + " steps)") {}
};

// Counts elementary rewrite steps across one top-level operation and fails
// loudly when the configured limit is hit. Guards against towers whose data
// does not actually terminate under rewriting.
class RewriteBudget {
public:
    explicit RewriteBudget(long long limit) : limit_(limit), remaining_(limit) {}
    void tick(long long cost = 1) {
        remaining_ -= cost;
        if (remaining_ < 0) throw BudgetExhausted(limit_);
    }
    long long used() const { return limit_ - remaining_; }

private:
    long long limit_;
    long long remaining_;
};

// Ore data for one extension step: generator images of sigma, its supplied
// inverse, and delta on every earlier generator. Images are stored at full
// tower arity but must be supported on strictly earlier generators.
struct OreStep {
    std::vector<NcPoly> sigma;
    std::vector<NcPoly> sigma_inv;
    std::vector<NcPoly> delta;
};

class Tower {
public:
    static constexpr long long kDefaultBudget = 1'000'000;

    Tower() = default;
    // steps.size() must equal names.size(); steps[0] is ignored (empty maps).
    Tower(std::vector<std::string> names, std::vector<OreStep> steps,
          long long budget = kDefaultBudget);

    // Commutative polynomial tower: sigma = id, delta = 0 at every step.
    static Tower trivial(std::vector<std::string> names, long long budget = kDefaultBudget);

    std::size_t arity() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    // Step data for generator g (g >= 1), image of generator j < g.
    const NcPoly& sigma_image(std::size_t g, std::size_t j) const;
    const NcPoly& sigma_inv_image(std::size_t g, std::size_t j) const;
    const NcPoly& delta_image(std::size_t g, std::size_t j) const;
    const OreStep& step(std::size_t g) const { return steps_[g]; }

    long long rewrite_budget() const { return budget_; }
    Tower with_budget(long long budget) const;
    Tower with_step(std::size_t g, OreStep step) const;

    friend bool operator==(const Tower& a, const Tower& b);

private:
    std::vector<std::string> names_;
    std::vector<OreStep> steps_;
    long long budget_ = kDefaultBudget;

    void check_structure() const;
};

// Ring operations. Multiplication rewrites products into PBW form with the
// step relations x_g * r = sigma_g(r) * x_g + delta_g(r).
NcPoly mul(const NcPoly& p, const NcPoly& q, const Tower& t);
NcPoly mul(const NcPoly& p, const NcPoly& q, const Tower& t, RewriteBudget& budget);
NcPoly power(const NcPoly& p, std::uint32_t k, const Tower& t);
NcPoly power(const NcPoly& p, std::uint32_t k, const Tower& t, RewriteBudget& budget);

// sigma_g extended multiplicatively to a polynomial supported below g.
NcPoly apply_endo(std::size_t g, const NcPoly& p, const Tower& t);
NcPoly apply_endo(std::size_t g, const NcPoly& p, const Tower& t, RewriteBudget& budget);
NcPoly apply_endo_inverse(std::size_t g, const NcPoly& p, const Tower& t);
NcPoly apply_endo_inverse(std::size_t g, const NcPoly& p, const Tower& t, RewriteBudget& budget);

// delta_g extended by the twisted Leibniz rule delta(ab) = delta(a)b + sigma(a)delta(b).
NcPoly apply_skew_derivation(std::size_t g, const NcPoly& p, const Tower& t);
NcPoly apply_skew_derivation(std::size_t g, const NcPoly& p, const Tower& t, RewriteBudget& budget);

// Well-definedness of the tower data. For every a < b < g checks that
// sigma_g respects the step-b relation, that delta_g applied to both sides of
// that relation agrees, and that the supplied sigma inverse really inverts
// sigma_g on generators.
CheckList validate_tower(const Tower& t);

}  // namespace skewhopf
