#pragma once

#include "exprings/epoly.hpp"
#include "exprings/errors.hpp"
#include "exprings/ideal.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace exprings {

struct DaggerVerdict {
    bool holds = true;
    std::optional<EPoly> witness;
    /// Generators of I ∩ R_{n-1} that were tested.
    std::vector<EPoly> tested;
    /// Generators skipped because E is undefined on them (nonzero constant).
    std::vector<EPoly> skipped;
    std::size_t layer = 0;

    std::string describe() const;
};

/// Generator-based test of: u ∈ I ∩ R_{n-1} implies E(u) - 1 ∈ I.
/// A failure is definitive; success only covers the computed generators.
DaggerVerdict dagger_check(const IdealHandle& ideal, std::size_t layer);
DaggerVerdict dagger_check(const IdealHandle& ideal);

/// Part of an exponent e in R_n that lies in A_n: the layer-n terms, or for
/// n = 0 everything but the constant.
EPoly top_part(const EPoly& e, std::size_t n);

/// Finite slice of a direct summand of I_{n-1} in I_n, stored in echelon
/// form over the projections onto A_n.
class TrackedDecomposition {
public:
    struct Row {
        EPoly projection;  // pi_{A_n}(element), pivot = last (largest) key
        EPoly element;     // element of the ideal with that projection
        EPoly lower;       // element - projection, in R_{n-1}
    };

    struct Split {
        EPoly tracked;     // f in the tracked span
        EPoly lower;       // pi_{R_{n-1}}(f)
        EPoly complement;  // a_1
    };

    explicit TrackedDecomposition(std::size_t nvars = 0, std::size_t level = 0) : nvars_(nvars), level_(level) {}

    std::size_t level() const { return level_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<EPoly>& seeds() const& { return seeds_; }
    std::vector<EPoly> seeds() && { return std::move(seeds_); }
    const std::vector<Row>& rows() const& { return rows_; }
    std::vector<Row> rows() && { return std::move(rows_); }

    /// Adds an element if its projection is independent of the span.
    /// Rejects (returns false with a reason) elements with a nonzero
    /// constant term or of height above the level.
    bool add(const EPoly& f, std::string* reason = nullptr);

    /// a = pi(f) + a_1 with f tracked and a_1 free of pivot coordinates.
    Split split(const EPoly& a) const;

private:
    std::size_t nvars_;
    std::size_t level_;
    std::vector<EPoly> seeds_;
    std::vector<Row> rows_;
};

struct SplitReport {
    TrackedDecomposition decomposition;
    std::vector<std::pair<EPoly, std::string>> rejected;
};

/// Greedy choice of independent seeds of I at layer n.  Seeds failing
/// membership are rejected with a report.
SplitReport split_tilde(const IdealHandle& ideal, std::size_t layer, const std::vector<EPoly>& seeds);

struct RewriteTerm {
    EPoly coefficient;  // r_i in R_n
    EPoly argument;     // u_i in the tracked span plus complement
};

/// u in R_{n+1} as sum r_i E(u_i) with distinct u_i.
std::vector<RewriteTerm> rewrite(const EPoly& u, const TrackedDecomposition& d);

/// sum_i r_i E(u_i)
EPoly reexpand(const std::vector<RewriteTerm>& terms, std::size_t nvars);

/// phi: R_{n+1} -> R_n, sum r_i E(u_i) |-> sum r_i.
EPoly rewrite_phi(const EPoly& u, const TrackedDecomposition& d);

/// Ideals I_{n0} ⊂ I_{n0+1} ⊂ ... with I_{k+1} = ker(R_{k+1} -> R_k -> R_k/I_k).
class TowerIdeal {
public:
    TowerIdeal(IdealHandle base, std::size_t base_level, std::vector<EPoly> seeds = {});
    TowerIdeal(const TowerIdeal& o);
    TowerIdeal& operator=(const TowerIdeal& o);

    std::size_t nvars() const { return base_.nvars(); }
    std::size_t base_level() const { return base_level_; }
    std::size_t top_level() const { return base_level_ + levels_.size(); }
    const IdealHandle& base() const { return base_; }
    /// Decomposition used to pass from `level` to `level + 1`.
    TrackedDecomposition decomposition(std::size_t level) const;
    /// Generators E(f) - 1 recorded while extending.
    std::vector<EPoly> recorded_generators() const;

    bool auto_refresh() const { return auto_refresh_; }
    void set_auto_refresh(bool on) { auto_refresh_ = on; }

    /// Membership in I_level, for u of height at most `level`.
    bool member(const EPoly& u, std::size_t level) const;
    bool member(const EPoly& u) const { return member(u, top_level()); }

    /// phi_level: R_{level+1} -> R_level, refreshing the tracking first when
    /// enabled.
    EPoly phi(const EPoly& u, std::size_t level) const;

    /// Generator-based (†) at the top level.
    DaggerVerdict dagger_at_top() const;

    /// Adds seeds to the decomposition at `level` (must be < top level).
    std::vector<std::pair<EPoly, std::string>> add_seeds(std::size_t level, const std::vector<EPoly>& seeds);

    nlohmann::json to_json() const;
    static TowerIdeal from_json(const nlohmann::json& j);

    friend TowerIdeal extend_one_step(const TowerIdeal& t, const std::vector<EPoly>& seeds);

private:
    struct Level {
        TrackedDecomposition decomposition;
        std::vector<EPoly> recorded;
    };

    std::optional<EPoly> refresh_candidate(const EPoly& a, std::size_t level) const;
    bool member_unlocked(const EPoly& u, std::size_t level) const;
    EPoly phi_unlocked(const EPoly& u, std::size_t level) const;
    void track(std::size_t level, const EPoly& f) const;
    std::vector<EPoly> generators_below(std::size_t level) const;

    IdealHandle base_;
    std::size_t base_level_;
    std::vector<EPoly> pending_seeds_;  // seeds for the next extension
    mutable std::vector<Level> levels_;
    bool auto_refresh_ = true;
    mutable std::recursive_mutex mutex_;
};

class DaggerFailure : public DomainError {
public:
    DaggerFailure(std::size_t level, EPoly witness);
    std::size_t level() const { return level_; }
    const EPoly& witness() const { return witness_; }

private:
    std::size_t level_;
    EPoly witness_;
};

/// One more level.  Refuses with DaggerFailure when (†) fails at the top.
/// The new level's tracking starts from `seeds`, the tower's pending seeds
/// and f*E(f) for every f tracked one level down.
TowerIdeal extend_one_step(const TowerIdeal& t, const std::vector<EPoly>& seeds = {});
TowerIdeal extend_to_E_ideal(const TowerIdeal& t, std::size_t levels);

struct DaggerDaggerReport {
    std::size_t level = 0;  // compares level and level + 1
    std::size_t samples = 0;
    std::vector<EPoly> disagreements;
    bool ok() const { return disagreements.empty(); }
};

/// I_{level+1} ∩ R_level = I_level on the given samples.
DaggerDaggerReport check_dagger_dagger(const TowerIdeal& t, std::size_t level, const std::vector<EPoly>& samples);

struct SaturationStep {
    EPoly added;   // E(u) - 1
    EPoly source;  // u ∈ I ∩ R_0
};

struct SaturationOutcome {
    bool success = false;
    IdealHandle ideal{0, {}};  // working ideal <J, I>
    std::vector<SaturationStep> steps;
    std::size_t iterations = 0;
    DaggerVerdict dagger;
    /// On failure: 1 = sum certificate[i] * ideal.generators()[i].
    std::vector<EPoly> certificate;
    bool certificate_verified = false;
};

/// Saturation loop for a proper ideal of R_1.
SaturationOutcome saturate_R1(const IdealHandle& ideal, std::size_t max_iterations = 32);

struct RealKernelReport {
    std::size_t layer = 0;
    std::size_t tuples = 0;
    std::size_t premises_met = 0;
    /// (tuple index, element) pairs where sum u_i^2 is in the kernel but u_i is not.
    std::vector<std::pair<std::size_t, EPoly>> falsifications;
    bool ok() const { return falsifications.empty(); }
};

RealKernelReport real_kernel_check(const IdealHandle& ideal, const std::vector<std::vector<EPoly>>& witnesses,
                                   std::size_t layer);

}  // namespace exprings
