#pragma once

#include <vector>

#include "avop/magma.hpp"  // Check / Witness
#include "avop/matrix.hpp"

namespace avop {

/// A bilinear bracket on Q^dim: bracket(e_i, e_j) = sum_k c[i][j][k] e_k.
struct StructureConstants {
  int dim = 0;
  std::vector<Rat> c;

  StructureConstants() = default;
  explicit StructureConstants(int d) : dim(d), c((size_t)d * d * d) {}
  Rat& at(int i, int j, int k) { return c[((size_t)i * dim + j) * dim + k]; }
  const Rat& at(int i, int j, int k) const { return c[((size_t)i * dim + j) * dim + k]; }
  bool operator==(const StructureConstants& o) const { return dim == o.dim && c == o.c; }

  Vec bracket_basis(int i, int j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
};

/// Left and right actions of a Leibniz algebra on a module:
/// rhoL[i][j][k] with rhoL(e_i, f_j) = sum_k ... f_k, and
/// rhoR[i][j][k] with rhoR(f_i, e_j) = sum_k ... f_k.
struct BiRepresentation {
  int alg_dim = 0;
  int mod_dim = 0;
  std::vector<Rat> rhoL;  // alg x mod x mod
  std::vector<Rat> rhoR;  // mod x alg x mod

  BiRepresentation() = default;
  BiRepresentation(int d, int m)
      : alg_dim(d), mod_dim(m), rhoL((size_t)d * m * m), rhoR((size_t)m * d * m) {}
  Rat& l(int i, int j, int k) { return rhoL[((size_t)i * mod_dim + j) * mod_dim + k]; }
  const Rat& l(int i, int j, int k) const { return rhoL[((size_t)i * mod_dim + j) * mod_dim + k]; }
  Rat& r(int i, int j, int k) { return rhoR[((size_t)i * alg_dim + j) * mod_dim + k]; }
  const Rat& r(int i, int j, int k) const { return rhoR[((size_t)i * alg_dim + j) * mod_dim + k]; }

  Vec act_left(const Vec& x, const Vec& v) const;   // x in algebra, v in module
  Vec act_right(const Vec& v, const Vec& x) const;
};

/// Two brackets subject to the five di-Leibniz identities.
struct DiLeibniz {
  StructureConstants left;   // -|
  StructureConstants right;  // |-

  int dim() const { return left.dim; }
  bool operator==(const DiLeibniz& o) const { return left == o.left && right == o.right; }
};

Check validate_lie(const StructureConstants& g);
Check validate_leibniz(const StructureConstants& h);
Check validate_di_leibniz(const DiLeibniz& d);
/// Lie bracket + Leibniz bracket with the Leibniz left translations acting
/// as derivations of the Lie bracket.
Check validate_lie_leibniz(const StructureConstants& lie, const StructureConstants& leib);

enum class LinearAvgKind { lie, leibniz_left, leibniz, ad_invariant };

/// lie:          [P x, P y] = P [P x, y]
/// leibniz_left: {P x, P y} = P {P x, y}
/// leibniz:      {P x, P y} = P {P x, y} = P {x, P y}
/// ad_invariant: C [x, y]   = [x, C y]
Check is_linear_averaging(LinearAvgKind kind, const StructureConstants& alg, const LinearMap& p);

Check validate_representation(const StructureConstants& h, const BiRepresentation& rep);

BiRepresentation adjoint_representation(const StructureConstants& h);
/// n copies of h with the componentwise actions.
BiRepresentation n_copy_representation(const StructureConstants& h, int n);

/// {P u, P v} = P rhoL(P u, v) = P rhoR(u, P v) on all module basis pairs.
Check is_relative_averaging_linear(const StructureConstants& h, const BiRepresentation& rep,
                                   const LinearMap& p);

/// Di-Leibniz on h (+) V: {(x,u),(y,v)}-| = ({x,y}, rhoR(u,y)) and
/// {(x,u),(y,v)}|- = ({x,y}, rhoL(x,v)). Post-validated.
DiLeibniz hemi_semidirect(const StructureConstants& h, const BiRepresentation& rep);

/// {u,v}-| = rhoR(u, P v), {u,v}|- = rhoL(P u, v) on the module; requires P
/// relative averaging. Post-validated.
DiLeibniz induced_di_leibniz(const StructureConstants& h, const BiRepresentation& rep,
                             const LinearMap& p);

/// Closure of the graph {(P v, v)} under both hemi-semidirect brackets,
/// decided by rational span membership. Equals is_relative_averaging_linear.
bool graph_check_linear(const StructureConstants& h, const BiRepresentation& rep,
                        const LinearMap& p);

/// The quotient of a di-Leibniz algebra by the span of all -|/|- differences,
/// with the canonical projection as a relative averaging operator.
struct Leibnizification {
  Quotient quo;
  StructureConstants leib;  // induced bracket on the quotient
  LinearMap q;              // projection, dim -> quotient dim
  BiRepresentation rep;     // action of the quotient on the original space
};

Leibnizification leibnizification(const DiLeibniz& d);

struct DiLeibnizEmbedding {
  Leibnizification base;
  StructureConstants ambient;  // Leibniz on quotient (+) original
  LinearMap averaging;         // (cls, y) -> (class of y, 0)
  LinearMap inclusion;         // y -> (0, y)
};

/// Embeds a di-Leibniz algebra into an averaging Leibniz algebra; the
/// inclusion is an injective di-Leibniz morphism into the structure induced
/// by the averaging operator. Post-verified.
DiLeibnizEmbedding embed_di_leibniz(const DiLeibniz& d);

/// {x,y}_P := [P x, y]; requires P lie-averaging. Post-verified Leibniz.
StructureConstants descendent_leibniz(const StructureConstants& lie, const LinearMap& p);

struct LieLeibnizPair {
  StructureConstants lie;
  StructureConstants leib;
};

/// The pair ([,], {,}_P), post-verified as a Lie-Leibniz algebra.
LieLeibnizPair lie_leibniz_bundle(const StructureConstants& lie, const LinearMap& p);

struct LieLeibnizEmbedding {
  Quotient quo;                 // by the span of Leibniz squares
  StructureConstants quot_lie;  // induced Lie bracket on the quotient
  StructureConstants ambient;   // Lie on quotient (+) original
  LinearMap averaging;
  LinearMap inclusion;
};

/// Embeds a Lie-Leibniz algebra into an averaging Lie algebra. The quotient
/// is by the span of the squares {x,x} of the Leibniz bracket, the kernel
/// of the canonical map onto a Lie algebra (the action of the quotient on
/// the original space is ill-defined on any larger subspace). Post-verified.
LieLeibnizEmbedding embed_lie_leibniz(const StructureConstants& lie,
                                      const StructureConstants& leib);

/// The braiding on k (+) g: S((a,x) (x) (b,y)) = (b,y) (x) (a,x)
/// + (0,[x,y]) (x) (1,0), as a (1+d)^2 square matrix. Requires the bracket
/// skew-symmetric; Jacobi is NOT required (the Yang-Baxter check is the
/// point).
Mat braided_from_lie(const StructureConstants& g);

/// The braid identity on the tensor cube by exact matrix products.
bool ybe_linear_check(const Mat& s);

/// S(A x (x) A y) = (A (x) Id) S(A x (x) y) for A = 1 (+) P on k (+) g.
bool braided_averaging_check(const StructureConstants& g, const LinearMap& p);

/// Differential Leibniz algebra: d^2 = 0 and d a derivation (both checked);
/// {x,y}-| = {x, d y}, {x,y}|- = {d x, y}.
DiLeibniz differential_di_leibniz(const StructureConstants& h, const LinearMap& d);

/// n-copy direct sum di-Leibniz: -| brackets against the total sum on the
/// right, |- against the total sum on the left.
DiLeibniz direct_sum_di_leibniz(const StructureConstants& h, int n);

Check is_associative(const StructureConstants& a);
/// P(a) P(b) = P(P(a) b) = P(a P(b)) for an associative product.
Check is_associative_averaging(const StructureConstants& a, const LinearMap& p);
StructureConstants commutator_bracket(const StructureConstants& assoc);

}  // namespace avop
