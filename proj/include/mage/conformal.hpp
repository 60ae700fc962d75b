#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mage/function_field.hpp"
#include "mage/qmatrix.hpp"
#include "mage/symbols.hpp"

namespace mage {

// ---------------------------------------------------------------------------
// T_n and S^2_{T_n}

/// Chart tangent coordinates v11, v12, ..., vnn (same order as p11, ..., pnn).
std::vector<std::string> tangent_names(int n);

/// T_n(v, ..., v) = det of the symmetric matrix (v_ij), a polynomial in tangent_names(n).
struct SymmetricNForm {
  int n = 0;
  MultiPoly diagonal;
};
SymmetricNForm tn_form(int n);

/// Gram matrix of a quadratic form in the tangent coordinates: G_ab = 1/2 d^2 q / dv_a dv_b.
QMatrix gram_matrix(const MultiPoly& quadratic, int n);
/// Fully polarized coefficients T(E_a, E_b, E_c) of a cubic form (n = 3 chart, 6^3 entries).
std::vector<Rational> cubic_polarization(const MultiPoly& cubic, int n);

/// X contracted into T_n once, as a form of degree n - 1 in the tangent coordinates:
/// (1/n) sum_a X_a dT_n/dv_a. X holds constant components in chart order.
MultiPoly contract(const SymmetricNForm& t, const QVector& x);

/// Signature of T_2 (as a quadratic form in v11, v12, v22).
Inertia tn_signature(int n);

struct S2TnMembership {
  bool member = false;
  /// Q(nu, nu) with nu_ij = xi_i xi_j, as a quartic in xi; zero exactly for members.
  XiPolynomial certificate;
};
/// q is symmetric over the n(n+1)/2 tangent coordinates.
S2TnMembership s2tn_membership(const QMatrix& q, int n);

/// Dimension of the kernel of total symmetrization on S^2(S^2 R^n), by exact nullspace.
std::size_t s2tn_dimension(int n);

// ---------------------------------------------------------------------------
// Graph hypersurfaces {p_s = h} and their fundamental forms

/// First and second derivatives of the graph function with respect to the frame
/// coordinates (every chart coordinate except the graph variable, in chart order).
struct GraphJets {
  int n = 0;
  std::string graph_variable;
  std::vector<std::string> frame;
  RFVector first;   // h_a
  RFMatrix second;  // h_ab
  /// h itself, needed to restrict ambient functions (the conformal weight) to the graph.
  std::optional<RationalFunction> value;
};

GraphJets graph_jets(const RationalFunction& h, int n, const std::string& graph_variable);

/// Solves the numerator of F for the first chart coordinate (p_nn first, then descending)
/// in which it is affine with a nonzero coefficient. Throws DomainError when none exists.
std::pair<std::string, RationalFunction> graph_form(const RationalFunction& f, int n);

struct FormOptions {
  /// Constant Gram matrix of the metric; defaults to T_2 for n = 2 and to the contraction
  /// of T_3 with the identity matrix for n = 3.
  std::optional<QMatrix> metric;
  /// Coordinate t of the normal rule g(N, d/dp_t) = 1; defaults to the graph variable.
  std::string normal_target;
  /// Conformal weight lambda of the metric exp(2 lambda) g, a function on the chart.
  std::optional<RationalFunction> log_weight;
  /// Skip det I, the mean curvature and trace-free II (costly for n = 3).
  bool skip_trace = false;
};

/// I, II and trace-free II of a graph hypersurface. The normal is the g-orthogonal one
/// normalized by g(N, d/dp_t) = 1 (no unit normalization). With a log weight, II is taken
/// for the metric exp(2 lambda) g with the same normal, through the connection difference
/// tensor; `second` then holds II / exp(2 lambda), and `first` still holds the g-form.
struct FundamentalForms {
  int n = 0;
  std::string graph_variable;
  std::string normal_target;
  std::vector<std::string> frame;
  bool log_weighted = false;
  RFMatrix first;
  RFMatrix second;
  RationalFunction det_first;
  /// Present when det(first) is not identically zero.
  std::optional<RationalFunction> mean_curvature;
  std::optional<RFMatrix> trace_free;
  /// 2x2 minors of the pair (I, II) over all index pairs; all zero iff II is proportional
  /// to I.
  std::vector<RationalFunction> proportionality_residuals;
  /// N(lambda) for the chosen normal, when a log weight is given.
  std::optional<RationalFunction> normal_derivative_of_weight;
};

FundamentalForms fundamental_forms(const GraphJets& jets, const FormOptions& opts = {});

/// Trace-free II of the n = 2 graph {p22 = h} scaled by 4 det I, entries (11, 12, 22):
/// polynomials in the jets that vanish exactly when trace-free II does (det I != 0).
std::vector<RationalFunction> trace_free_system(const GraphJets& jets);

// ---------------------------------------------------------------------------
// Hyperplane sections

/// n = 2: trace-free II of the graph vanishes (II proportional to I on the parabolic
/// locus); n = 3: the symmetric derivative of the symbol is divisible by the symbol on
/// {F = 0}.
bool hyperplane_test(const RationalFunction& f, int n);

/// n = 3: solves T_3(Y, e_a, e_b) = II_ab for Y over the function field, with the metric
/// contracted from the identity translation. Returns the residuals (empty iff solvable).
struct N3DirectCheck {
  bool member = false;
  std::vector<MultiPoly> residuals;
  std::string graph_variable;
};
N3DirectCheck n3_direct_check(const RationalFunction& f);

/// Polynomial vector field on the n = 3 chart, components in chart order.
struct VectorField {
  std::string name;
  std::vector<MultiPoly> components;
};

/// n = 3 at a rational point of {F = 0}: II for the metric X contracted with T_3, computed
/// with its Levi-Civita connection, tested for membership in the restriction of S^2_{T_3}.
/// Throws DomainError when X is degenerate at the point or the point is not on {F = 0}.
bool n3_pointwise_check(const RationalFunction& f, const VectorField& x, const Point& at);

struct DetIdentity {
  RationalFunction det_first;
  RationalFunction expected;  // -Delta / (4 (k3 + k0 p11)^2)
  RationalFunction delta;     // k2^2 - 4 k1 k3 + 4 k0 k4
  bool holds = false;
};
/// k = (k0, k1, k2, k3, k4) for k0 det + k1 p11 + k2 p12 + k3 p22 + k4; entries may be
/// symbolic. Throws DomainError when k3 + k0 p11 vanishes identically.
DetIdentity det_I_identity(const std::vector<RationalFunction>& k);

struct PhiReport {
  int n = 0;
  bool vanishes = false;
  std::string description;
  std::vector<RationalFunction> components;
};
PhiReport phi_obstruction(const RationalFunction& f, int n);

// ---------------------------------------------------------------------------
// Conformal symmetries of T_3

/// The 21 generators: 6 translations, 9 linear fields (row a into row b), 3 quadratic
/// fields P e_a e_a^T P and 3 fields P sym(e_a e_b^T) P, a < b.
std::vector<VectorField> sp6_generators();
/// The linear fields with coefficient 1 always on the first target slot.
std::vector<VectorField> sp6_linear_generators_literal();
VectorField stretching_field(int n);

struct ConformalCheck {
  bool conformal = false;
  MultiPoly mu;        // L_X T_3 = mu T_3 when conformal
  MultiPoly residual;  // L_X T_3 - mu T_3
};
ConformalCheck conformal_check(const VectorField& x);

/// Rank of the coefficient vectors of the given fields.
std::size_t field_rank(const std::vector<VectorField>& fields);

}  // namespace mage
