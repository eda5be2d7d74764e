#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgbv/matrix.hpp"

namespace dgbv {

struct BasisElement {
    std::string name;
    int degree = 0;
    std::optional<std::pair<int, int>> bidegree;  // (p, q) with p+q == degree
};

struct GradedBasis {
    std::vector<BasisElement> elems;

    size_t dim() const { return elems.size(); }
    int degree(size_t i) const { return elems[i].degree; }
    int parity(size_t i) const { return elems[i].degree & 1; }
    std::vector<int> parities() const;
    std::vector<int> degrees() const;
    int top_degree() const;
    /// Index by name, or nullopt.
    std::optional<size_t> find(const std::string& name) const;
    bool is_bigraded() const;
};

/// Finite-dimensional graded commutative associative unital algebra given by
/// structure constants.  Index 0 is the unit.
struct GradedAlgebra {
    GradedBasis basis;
    std::vector<std::vector<Vec>> table;  // table[i][j] = e_i ^ e_j

    size_t dim() const { return basis.dim(); }
    Vec unit() const { return unit_vec(dim(), 0); }
    Vec wedge(const Vec& a, const Vec& b) const;
};

/// The dGBV quadruple (A, ^, delta, Delta) plus the integral covector.
/// Both operators are raw matrices; nothing is assumed, everything is
/// certified by check_axioms / check_integral.
struct DgbvAlgebra {
    GradedAlgebra alg;
    Matrix delta;    // odd derivation candidate
    Matrix bvop;     // bracket generator candidate (Delta)
    Vec integral;    // linear functional, as a covector
    int delta_shift = 1;   // declared degree shift of delta
    int bvop_shift = -1;   // declared degree shift of Delta (caller-supplied)

    int delta_parity() const { return delta_shift & 1; }
    int bvop_parity() const { return bvop_shift & 1; }

    size_t dim() const { return alg.dim(); }

    /// The covariant bracket {l, m} = Delta l ^ m + (-1)^{|l|} l ^ Delta m
    /// - Delta(l ^ m), extended bilinearly over parity components.
    Vec brace(const Vec& a, const Vec& b) const;
    /// The Gerstenhaber bracket [a * b] = (-1)^{|a|-1} {a, b}.
    Vec bracket(const Vec& a, const Vec& b) const;
    /// The operator [a * .] as a matrix (columns = bracket with basis vectors).
    Matrix bracket_with(const Vec& a) const;

    Scalar integrate(const Vec& v) const;
    /// (a, b) = integral of a ^ b.
    Scalar pairing(const Vec& a, const Vec& b) const;
};

struct AxiomResult {
    std::string name;
    bool pass = true;
    std::string witness;  // human-readable description of a failing tuple
};

struct AxiomReport {
    std::vector<AxiomResult> results;
    bool all_pass() const;
    const AxiomResult* find(const std::string& name) const;
};

/// Exhaustive exact verification of the algebra, operator, and bracket
/// axioms over all basis pairs/triples.
AxiomReport check_axioms(const DgbvAlgebra& A);

struct IntegralReport {
    bool is_integral = false;  // adjointness identities for delta and Delta
    bool is_nice = false;      // induced pairing on H(A, delta) nondegenerate
    size_t h_dim = 0;
    size_t pairing_rank = 0;
    std::string witness;
};

IntegralReport check_integral(const DgbvAlgebra& A);

/// Representatives of a basis of H(A, delta) computed without any inner
/// product (complement of Im delta inside Ker delta).
std::vector<Vec> cohomology_representatives(const GradedAlgebra& alg, const Matrix& delta);

/// Twist delta by an even Maurer-Cartan element: delta_a = delta + [a * .].
/// Preconditions (a even, delta a + 1/2 [a*a] = 0, Delta a = 0) are checked
/// exactly; a violation is reported through the error string.
std::optional<DgbvAlgebra> shift_dgbv(const DgbvAlgebra& A, const Vec& a, std::string* error);

/// True when every nonzero entry of f maps degree d to degree d+shift.
bool respects_shift(const Matrix& f, const GradedBasis& basis, int shift);

}  // namespace dgbv
