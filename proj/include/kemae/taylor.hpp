#ifndef KEMAE_TAYLOR_HPP
#define KEMAE_TAYLOR_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "kemae/axis.hpp"
#include "kemae/geometry.hpp"

namespace kemae {

/// Truncated expansion P = sum_{h<=H} c_h(x1)*x2^h, exact modulo x2^(H+1).
/// Coefficients are univariate polynomials in x1; c_0(0) = 1.
struct X2Series {
    std::vector<Polynomial> coefficients;
    int truncation_order = 0;

    /// Reads the x2-coefficients of a bivariate polynomial through max_order.
    static X2Series expand(const Polynomial& P, int max_order);

    /// The bivariate polynomial sum c_h(x1)*x2^h.
    Polynomial assemble() const;

    /// Copy with trailing zero coefficients removed (c_0 always kept).
    X2Series nonzero_prefix() const;
};

enum class PropagationStatus { terminated_polynomial, still_open, obstructed };

const char* to_string(PropagationStatus status);

struct ObstructionDetail {
    int order = 0;
    Polynomial remainder;
};

struct PropagationOutcome {
    X2Series series;
    PropagationStatus status = PropagationStatus::still_open;
    std::optional<ObstructionDetail> obstruction_detail;
};

/// Thrown by propagate_step when no polynomial coefficient can continue the
/// prefix: the forced division left a remainder.
class ObstructionError : public std::runtime_error {
  public:
    ObstructionError(int order, Polynomial remainder);
    int order() const { return order_; }
    const Polynomial& remainder() const { return remainder_; }

  private:
    int order_;
    Polynomial remainder_;
};

/// E(x1) = (c0*c0'' - c0'^2)*x1 + c0*c0', the factor multiplying the next
/// unknown coefficient at every propagation order. For c0 = (1+t/k)^k this
/// is (1+t/k)^(2k-2).
Polynomial edge_factor(const Polynomial& c0);

/// The unique c_{h+1} for which the x2^h coefficient of
/// det(ma_matrix(P)) - P^(4-s) vanishes, given c_0..c_h (entries of the
/// series above order h are ignored). That coefficient is affine in c_{h+1}
/// with factor (h+1)^2 * c_0 * edge_factor(c_0), asserted on every call.
/// Requires h >= 1 and a nonzero edge factor.
Polynomial propagate_step(const X2Series& series, int s, int h);

/// Runs the recursion from (c_0, c_1) = (p0, p1) up to max_order (>= 2),
/// stopping early once the nonzero prefix assembles to an exact solution;
/// the remaining coefficients are then zero by uniqueness and are padded in.
PropagationOutcome propagate(const CauchyDatum& datum, int max_order);

/// Same engine on raw initial data; lets callers probe pairs that
/// CauchyDatum::make would reject. Both inputs univariate, c0(0) = 1.
PropagationOutcome propagate_series(const Polynomial& c0, const Polynomial& c1, int s,
                                    int max_order);

struct ClassificationEntry {
    CauchyDatum datum;
    PropagationOutcome outcome;
};

struct ClassificationResult {
    int s = 0;
    int max_order = 0;
    std::vector<ClassificationEntry> entries;
    std::vector<SolutionRecord> solutions;

    /// True when every datum resolved (terminated or obstructed).
    bool complete() const;
};

/// Propagates every Cauchy datum admitted for s; solutions collects the
/// terminated outcomes that pass admissible_candidate_check, labeled by
/// catalog lookup. Data still open at max_order stay visible in entries.
ClassificationResult classify(int s, int max_order);

}  // namespace kemae

#endif
