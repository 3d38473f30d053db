#include "avop/algebra.hpp"

namespace avop {

namespace {

Vec basis_vec(int dim, int i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool eq(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool zero(const Vec& a) {
  for (const Rat& x : a)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

Vec StructureConstants::bracket_basis(int i, int j) const {
  Vec v(dim);
  for (int k = 0; k < dim; ++k) v[k] = at(i, j, k);
  return v;
}

Vec StructureConstants::bracket(const Vec& x, const Vec& y) const {
  if ((int)x.size() != dim || (int)y.size() != dim)
    throw input_error("bracket operand size mismatch");
  Vec v(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      Rat f = x[i] * y[j];
      for (int k = 0; k < dim; ++k)
        if (!at(i, j, k).is_zero()) v[k] += f * at(i, j, k);
    }
  }
  return v;
}

Vec BiRepresentation::act_left(const Vec& x, const Vec& v) const {
  if ((int)x.size() != alg_dim || (int)v.size() != mod_dim)
    throw input_error("left action size mismatch");
  Vec out(mod_dim);
  for (int i = 0; i < alg_dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < mod_dim; ++j) {
      if (v[j].is_zero()) continue;
      Rat f = x[i] * v[j];
      for (int k = 0; k < mod_dim; ++k)
        if (!l(i, j, k).is_zero()) out[k] += f * l(i, j, k);
    }
  }
  return out;
}

Vec BiRepresentation::act_right(const Vec& v, const Vec& x) const {
  if ((int)x.size() != alg_dim || (int)v.size() != mod_dim)
    throw input_error("right action size mismatch");
  Vec out(mod_dim);
  for (int i = 0; i < mod_dim; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < alg_dim; ++j) {
      if (x[j].is_zero()) continue;
      Rat f = v[i] * x[j];
      for (int k = 0; k < mod_dim; ++k)
        if (!r(i, j, k).is_zero()) out[k] += f * r(i, j, k);
    }
  }
  return out;
}

Check validate_lie(const StructureConstants& g) {
  const int d = g.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j)
      if (!zero(add(g.bracket_basis(i, j), g.bracket_basis(j, i))))
        return Check::fail("skew-symmetry", {i, j});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec s = add(add(g.bracket(basis_vec(d, i), g.bracket_basis(j, k)),
                        g.bracket(basis_vec(d, j), g.bracket_basis(k, i))),
                    g.bracket(basis_vec(d, k), g.bracket_basis(i, j)));
        if (!zero(s)) return Check::fail("jacobi", {i, j, k});
      }
  return {};
}

Check validate_leibniz(const StructureConstants& h) {
  const int d = h.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec lhs = h.bracket(basis_vec(d, i), h.bracket_basis(j, k));
        Vec rhs = add(h.bracket(h.bracket_basis(i, j), basis_vec(d, k)),
                      h.bracket(basis_vec(d, j), h.bracket_basis(i, k)));
        if (!eq(lhs, rhs)) return Check::fail("leibniz-identity", {i, j, k});
      }
  return {};
}

Check validate_di_leibniz(const DiLeibniz& dl) {
  if (dl.left.dim != dl.right.dim) throw input_error("di-Leibniz brackets of different dims");
  const int d = dl.dim();
  const StructureConstants &L = dl.left, &R = dl.right;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec ei = basis_vec(d, i), ej = basis_vec(d, j), ek = basis_vec(d, k);
        Vec l_jk = L.bracket_basis(j, k), r_jk = R.bracket_basis(j, k);
        Vec l_ij = L.bracket_basis(i, j), r_ij = R.bracket_basis(i, j);
        Vec l_ik = L.bracket_basis(i, k), r_ik = R.bracket_basis(i, k);
        if (!eq(L.bracket(ei, l_jk), add(L.bracket(l_ij, ek), R.bracket(ej, l_ik))))
          return Check::fail("dl1", {i, j, k});
        if (!eq(L.bracket(ei, r_jk), add(L.bracket(l_ij, ek), R.bracket(ej, l_ik))))
          return Check::fail("dl2", {i, j, k});
        if (!eq(R.bracket(ei, l_jk), add(L.bracket(r_ij, ek), L.bracket(ej, l_ik))))
          return Check::fail("dl3", {i, j, k});
        if (!eq(R.bracket(ei, r_jk), add(R.bracket(l_ij, ek), R.bracket(ej, r_ik))))
          return Check::fail("dl4", {i, j, k});
        if (!eq(R.bracket(ei, r_jk), add(R.bracket(r_ij, ek), R.bracket(ej, r_ik))))
          return Check::fail("dl5", {i, j, k});
      }
  return {};
}

Check validate_lie_leibniz(const StructureConstants& lie, const StructureConstants& leib) {
  if (lie.dim != leib.dim) throw input_error("Lie-Leibniz brackets of different dims");
  Check cl = validate_lie(lie);
  if (!cl) return Check::fail("lie-" + cl.witness.axiom, cl.witness.where);
  Check ch = validate_leibniz(leib);
  if (!ch) return Check::fail("leibniz-" + ch.witness.axiom, ch.witness.where);
  const int d = lie.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec lhs = leib.bracket(basis_vec(d, i), lie.bracket_basis(j, k));
        Vec rhs = add(lie.bracket(leib.bracket_basis(i, j), basis_vec(d, k)),
                      lie.bracket(basis_vec(d, j), leib.bracket_basis(i, k)));
        if (!eq(lhs, rhs)) return Check::fail("derivation-compatibility", {i, j, k});
      }
  return {};
}

Check is_linear_averaging(LinearAvgKind kind, const StructureConstants& alg, const LinearMap& p) {
  const int d = alg.dim;
  if (p.rows != d || p.cols != d) throw input_error("operator dimension mismatch");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec pi = p.apply(basis_vec(d, i)), ej = basis_vec(d, j);
      Vec pj = p.apply(ej);
      switch (kind) {
        case LinearAvgKind::lie:
        case LinearAvgKind::leibniz_left:
          if (!eq(alg.bracket(pi, pj), p.apply(alg.bracket(pi, ej))))
            return Check::fail("left-averaging-identity", {i, j});
          break;
        case LinearAvgKind::leibniz: {
          Vec lhs = alg.bracket(pi, pj);
          if (!eq(lhs, p.apply(alg.bracket(pi, ej))))
            return Check::fail("left-averaging-identity", {i, j});
          if (!eq(lhs, p.apply(alg.bracket(basis_vec(d, i), pj))))
            return Check::fail("right-averaging-identity", {i, j});
          break;
        }
        case LinearAvgKind::ad_invariant:
          if (!eq(p.apply(alg.bracket_basis(i, j)), alg.bracket(basis_vec(d, i), pj)))
            return Check::fail("ad-invariance", {i, j});
          break;
      }
    }
  return {};
}

Check validate_representation(const StructureConstants& h, const BiRepresentation& rep) {
  if (rep.alg_dim != h.dim) throw input_error("representation algebra dimension mismatch");
  const int d = h.dim, m = rep.mod_dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < m; ++k) {
        Vec x = basis_vec(d, i), y = basis_vec(d, j), v = basis_vec(m, k);
        Vec xy = h.bracket_basis(i, j);
        if (!eq(rep.act_left(x, rep.act_left(y, v)),
                add(rep.act_left(xy, v), rep.act_left(y, rep.act_left(x, v)))))
          return Check::fail("rep-left-left", {i, j, k});
        if (!eq(rep.act_left(x, rep.act_right(v, y)),
                add(rep.act_right(rep.act_left(x, v), y), rep.act_right(v, xy))))
          return Check::fail("rep-left-right", {i, j, k});
        if (!eq(rep.act_right(v, xy),
                add(rep.act_right(rep.act_right(v, x), y),
                    rep.act_left(x, rep.act_right(v, y)))))
          return Check::fail("rep-right-bracket", {i, j, k});
      }
  return {};
}

BiRepresentation adjoint_representation(const StructureConstants& h) {
  const int d = h.dim;
  BiRepresentation rep(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        rep.l(i, j, k) = h.at(i, j, k);
        rep.r(i, j, k) = h.at(i, j, k);
      }
  return rep;
}

BiRepresentation n_copy_representation(const StructureConstants& h, int n) {
  const int d = h.dim;
  BiRepresentation rep(d, n * d);
  for (int t = 0; t < n; ++t)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          rep.l(i, t * d + j, t * d + k) = h.at(i, j, k);
          rep.r(t * d + i, j, t * d + k) = h.at(i, j, k);
        }
  return rep;
}

Check is_relative_averaging_linear(const StructureConstants& h, const BiRepresentation& rep,
                                   const LinearMap& p) {
  if (p.rows != h.dim || p.cols != rep.mod_dim)
    throw input_error("relative operator dimension mismatch");
  const int m = rep.mod_dim;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vec u = basis_vec(m, i), v = basis_vec(m, j);
      Vec pu = p.apply(u), pv = p.apply(v);
      Vec lhs = h.bracket(pu, pv);
      if (!eq(lhs, p.apply(rep.act_left(pu, v))))
        return Check::fail("relative-left-identity", {i, j});
      if (!eq(lhs, p.apply(rep.act_right(u, pv))))
        return Check::fail("relative-right-identity", {i, j});
    }
  return {};
}

DiLeibniz hemi_semidirect(const StructureConstants& h, const BiRepresentation& rep) {
  Check c = validate_representation(h, rep);
  if (!c) throw precondition_error("invalid representation: " + c.witness.axiom);
  const int d = h.dim, m = rep.mod_dim, n = d + m;
  DiLeibniz dl{StructureConstants(n), StructureConstants(n)};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        dl.left.at(i, j, k) = h.at(i, j, k);
        dl.right.at(i, j, k) = h.at(i, j, k);
      }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < m; ++k)
        dl.left.at(d + i, j, d + k) = rep.r(i, j, k);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        dl.right.at(i, d + j, d + k) = rep.l(i, j, k);
  Check v = validate_di_leibniz(dl);
  if (!v) throw internal_error("hemi-semidirect product failed " + v.witness.axiom);
  return dl;
}

DiLeibniz induced_di_leibniz(const StructureConstants& h, const BiRepresentation& rep,
                             const LinearMap& p) {
  Check ra = is_relative_averaging_linear(h, rep, p);
  if (!ra) throw precondition_error("operator is not relative averaging: " + ra.witness.axiom);
  const int m = rep.mod_dim;
  DiLeibniz dl{StructureConstants(m), StructureConstants(m)};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vec lv = rep.act_right(basis_vec(m, i), p.apply(basis_vec(m, j)));
      Vec rv = rep.act_left(p.apply(basis_vec(m, i)), basis_vec(m, j));
      for (int k = 0; k < m; ++k) {
        dl.left.at(i, j, k) = lv[k];
        dl.right.at(i, j, k) = rv[k];
      }
    }
  Check v = validate_di_leibniz(dl);
  if (!v) throw internal_error("induced di-Leibniz failed " + v.witness.axiom);
  return dl;
}

bool graph_check_linear(const StructureConstants& h, const BiRepresentation& rep,
                        const LinearMap& p) {
  if (p.rows != h.dim || p.cols != rep.mod_dim)
    throw input_error("relative operator dimension mismatch");
  Check repok = validate_representation(h, rep);
  if (!repok) throw precondition_error("invalid representation: " + repok.witness.axiom);
  const int d = h.dim, m = rep.mod_dim, n = d + m;
  DiLeibniz hemi = hemi_semidirect(h, rep);

  // Graph spanning vectors (P f_j, f_j) inside h (+) V.
  std::vector<Vec> span;
  for (int j = 0; j < m; ++j) {
    Vec g(n);
    Vec pj = p.apply(basis_vec(m, j));
    for (int k = 0; k < d; ++k) g[k] = pj[k];
    g[d + j] = 1;
    span.push_back(g);
  }
  Rref basis = rref(span, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (!in_row_span(basis, hemi.left.bracket(span[i], span[j]))) return false;
      if (!in_row_span(basis, hemi.right.bracket(span[i], span[j]))) return false;
    }
  return true;
}

Leibnizification leibnizification(const DiLeibniz& dl) {
  Check v = validate_di_leibniz(dl);
  if (!v) throw precondition_error("invalid di-Leibniz algebra: " + v.witness.axiom);
  const int d = dl.dim();

  std::vector<Vec> diffs;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec w(d);
      for (int k = 0; k < d; ++k) w[k] = dl.left.at(i, j, k) - dl.right.at(i, j, k);
      diffs.push_back(std::move(w));
    }

  Leibnizification out;
  out.quo = quotient_by_span(diffs, d);
  const int qd = out.quo.dim();

  out.leib = StructureConstants(qd);
  for (int a = 0; a < qd; ++a)
    for (int b = 0; b < qd; ++b) {
      Vec br = dl.left.bracket_basis(out.quo.complement[a], out.quo.complement[b]);
      Vec cls = out.quo.project(br);
      for (int k = 0; k < qd; ++k) out.leib.at(a, b, k) = cls[k];
    }

  out.q = LinearMap(qd, d);
  for (int j = 0; j < d; ++j) {
    Vec cls = out.quo.project(basis_vec(d, j));
    for (int k = 0; k < qd; ++k) out.q.at(k, j) = cls[k];
  }

  out.rep = BiRepresentation(qd, d);
  for (int a = 0; a < qd; ++a)
    for (int j = 0; j < d; ++j) {
      Vec lv = dl.right.bracket_basis(out.quo.complement[a], j);
      Vec rv = dl.left.bracket_basis(j, out.quo.complement[a]);
      for (int k = 0; k < d; ++k) {
        out.rep.l(a, j, k) = lv[k];
        out.rep.r(j, a, k) = rv[k];
      }
    }

  Check lc = validate_leibniz(out.leib);
  if (!lc) throw internal_error("quotient bracket is not Leibniz: " + lc.witness.axiom);
  Check rc = validate_representation(out.leib, out.rep);
  if (!rc) throw internal_error("quotient action is not a representation: " + rc.witness.axiom);
  Check qc = is_relative_averaging_linear(out.leib, out.rep, out.q);
  if (!qc) throw internal_error("projection is not relative averaging: " + qc.witness.axiom);
  if (!(induced_di_leibniz(out.leib, out.rep, out.q) == dl))
    throw internal_error("projection does not induce the original di-Leibniz algebra");
  return out;
}

DiLeibnizEmbedding embed_di_leibniz(const DiLeibniz& dl) {
  DiLeibnizEmbedding e;
  e.base = leibnizification(dl);
  const int d = dl.dim(), qd = e.base.quo.dim(), n = qd + d;

  e.ambient = StructureConstants(n);
  for (int a = 0; a < qd; ++a)
    for (int b = 0; b < qd; ++b)
      for (int k = 0; k < qd; ++k) e.ambient.at(a, b, k) = e.base.leib.at(a, b, k);
  for (int a = 0; a < qd; ++a)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        e.ambient.at(a, qd + j, qd + k) = e.base.rep.l(a, j, k);
        e.ambient.at(qd + j, a, qd + k) = e.base.rep.r(j, a, k);
      }

  e.averaging = LinearMap(n, n);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < qd; ++k) e.averaging.at(k, qd + j) = e.base.q.at(k, j);
  e.inclusion = LinearMap(n, d);
  for (int j = 0; j < d; ++j) e.inclusion.at(qd + j, j) = 1;

  Check lc = validate_leibniz(e.ambient);
  if (!lc) throw internal_error("embedding ambient is not Leibniz: " + lc.witness.axiom);
  Check ac = is_linear_averaging(LinearAvgKind::leibniz, e.ambient, e.averaging);
  if (!ac) throw internal_error("embedding operator is not averaging: " + ac.witness.axiom);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec ui = e.inclusion.apply(basis_vec(d, i)), uj = e.inclusion.apply(basis_vec(d, j));
      Vec lhs_l = e.inclusion.apply(dl.left.bracket_basis(i, j));
      Vec lhs_r = e.inclusion.apply(dl.right.bracket_basis(i, j));
      if (!eq(lhs_l, e.ambient.bracket(ui, e.averaging.apply(uj))))
        throw internal_error("inclusion fails the left di-Leibniz bracket");
      if (!eq(lhs_r, e.ambient.bracket(e.averaging.apply(ui), uj)))
        throw internal_error("inclusion fails the right di-Leibniz bracket");
    }
  return e;
}

StructureConstants descendent_leibniz(const StructureConstants& lie, const LinearMap& p) {
  Check lc = validate_lie(lie);
  if (!lc) throw precondition_error("descendent Leibniz needs a Lie algebra");
  Check ac = is_linear_averaging(LinearAvgKind::lie, lie, p);
  if (!ac) throw precondition_error("descendent Leibniz needs an averaging operator");
  const int d = lie.dim;
  StructureConstants out(d);
  for (int i = 0; i < d; ++i) {
    Vec pi = p.apply(basis_vec(d, i));
    for (int j = 0; j < d; ++j) {
      Vec br = lie.bracket(pi, basis_vec(d, j));
      for (int k = 0; k < d; ++k) out.at(i, j, k) = br[k];
    }
  }
  Check v = validate_leibniz(out);
  if (!v) throw internal_error("descendent bracket is not Leibniz");
  return out;
}

LieLeibnizPair lie_leibniz_bundle(const StructureConstants& lie, const LinearMap& p) {
  LieLeibnizPair pair{lie, descendent_leibniz(lie, p)};
  Check v = validate_lie_leibniz(pair.lie, pair.leib);
  if (!v) throw internal_error("descendent pair is not Lie-Leibniz: " + v.witness.axiom);
  return pair;
}

LieLeibnizEmbedding embed_lie_leibniz(const StructureConstants& lie,
                                      const StructureConstants& leib) {
  Check v = validate_lie_leibniz(lie, leib);
  if (!v) throw precondition_error("invalid Lie-Leibniz algebra: " + v.witness.axiom);
  const int d = lie.dim;

  // Span of all Leibniz squares {x,x}: the diagonal brackets plus the
  // polarized symmetric parts.
  std::vector<Vec> squares;
  for (int i = 0; i < d; ++i) squares.push_back(leib.bracket_basis(i, i));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      squares.push_back(add(leib.bracket_basis(i, j), leib.bracket_basis(j, i)));

  LieLeibnizEmbedding e;
  e.quo = quotient_by_span(squares, d);
  const int qd = e.quo.dim(), n = qd + d;

  e.quot_lie = StructureConstants(qd);
  for (int a = 0; a < qd; ++a)
    for (int b = 0; b < qd; ++b) {
      Vec cls = e.quo.project(leib.bracket_basis(e.quo.complement[a], e.quo.complement[b]));
      for (int k = 0; k < qd; ++k) e.quot_lie.at(a, b, k) = cls[k];
    }
  Check ql = validate_lie(e.quot_lie);
  if (!ql) throw internal_error("Leibniz quotient is not Lie: " + ql.witness.axiom);

  // rho(cls a, y) = {rep_a, y}; ambient bracket
  // [(cls,y),(cls',y')] = ([cls,cls'], rho(cls,y') - rho(cls',y) + [y,y']).
  auto rho = [&](int a, const Vec& y) {
    return leib.bracket(basis_vec(d, e.quo.complement[a]), y);
  };
  e.ambient = StructureConstants(n);
  for (int a = 0; a < qd; ++a)
    for (int b = 0; b < qd; ++b)
      for (int k = 0; k < qd; ++k) e.ambient.at(a, b, k) = e.quot_lie.at(a, b, k);
  for (int a = 0; a < qd; ++a)
    for (int j = 0; j < d; ++j) {
      Vec act = rho(a, basis_vec(d, j));
      for (int k = 0; k < d; ++k) {
        e.ambient.at(a, qd + j, qd + k) = act[k];
        e.ambient.at(qd + j, a, qd + k) = -act[k];
      }
    }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec br = lie.bracket_basis(i, j);
      for (int k = 0; k < d; ++k) e.ambient.at(qd + i, qd + j, qd + k) = br[k];
    }

  e.averaging = LinearMap(n, n);
  for (int j = 0; j < d; ++j) {
    Vec cls = e.quo.project(basis_vec(d, j));
    for (int k = 0; k < qd; ++k) e.averaging.at(k, qd + j) = cls[k];
  }
  e.inclusion = LinearMap(n, d);
  for (int j = 0; j < d; ++j) e.inclusion.at(qd + j, j) = 1;

  Check al = validate_lie(e.ambient);
  if (!al) throw internal_error("embedding ambient is not Lie: " + al.witness.axiom);
  Check ac = is_linear_averaging(LinearAvgKind::lie, e.ambient, e.averaging);
  if (!ac) throw internal_error("embedding operator is not averaging");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec ui = e.inclusion.apply(basis_vec(d, i)), uj = e.inclusion.apply(basis_vec(d, j));
      if (!eq(e.inclusion.apply(lie.bracket_basis(i, j)), e.ambient.bracket(ui, uj)))
        throw internal_error("inclusion fails the Lie bracket");
      if (!eq(e.inclusion.apply(leib.bracket_basis(i, j)),
              e.ambient.bracket(e.averaging.apply(ui), uj)))
        throw internal_error("inclusion fails the descendent Leibniz bracket");
    }
  return e;
}

Mat braided_from_lie(const StructureConstants& g) {
  const int d = g.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j)
      if (!zero(add(g.bracket_basis(i, j), g.bracket_basis(j, i))))
        throw precondition_error("braiding needs a skew-symmetric bracket");
  const int s = 1 + d;
  Mat m(s * s, s * s);
  for (int p = 0; p < s; ++p)
    for (int q = 0; q < s; ++q) {
      int col = p * s + q;
      m.at(q * s + p, col) += 1;  // the swap part
      if (p > 0 && q > 0) {
        int i = p - 1, j = q - 1;
        for (int k = 0; k < d; ++k)
          if (!g.at(i, j, k).is_zero()) m.at((1 + k) * s + 0, col) += g.at(i, j, k);
      }
    }
  return m;
}

bool ybe_linear_check(const Mat& s) {
  if (s.rows != s.cols) throw input_error("braiding matrix must be square");
  int side = 0;
  while (side * side < s.rows) ++side;
  if (side * side != s.rows) throw input_error("braiding matrix side is not a square");
  Mat id = Mat::eye(side);
  Mat s12 = kron(s, id), s23 = kron(id, s);
  return s23 * s12 * s23 == s12 * s23 * s12;
}

bool braided_averaging_check(const StructureConstants& g, const LinearMap& p) {
  const int d = g.dim;
  if (p.rows != d || p.cols != d) throw input_error("operator dimension mismatch");
  Mat s = braided_from_lie(g);
  const int side = 1 + d;
  Mat a(side, side);
  a.at(0, 0) = 1;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a.at(1 + i, 1 + j) = p.at(i, j);
  Mat id = Mat::eye(side);
  return s * kron(a, a) == kron(a, id) * s * kron(a, id);
}

DiLeibniz differential_di_leibniz(const StructureConstants& h, const LinearMap& dmap) {
  Check lc = validate_leibniz(h);
  if (!lc) throw precondition_error("differential construction needs a Leibniz algebra");
  const int d = h.dim;
  if (dmap.rows != d || dmap.cols != d) throw input_error("differential dimension mismatch");
  if (!(dmap * dmap).is_zero()) throw precondition_error("differential does not square to zero");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec lhs = dmap.apply(h.bracket_basis(i, j));
      Vec rhs = add(h.bracket(dmap.apply(basis_vec(d, i)), basis_vec(d, j)),
                    h.bracket(basis_vec(d, i), dmap.apply(basis_vec(d, j))));
      if (!eq(lhs, rhs))
        throw precondition_error("differential is not a derivation at (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
    }
  DiLeibniz dl{StructureConstants(d), StructureConstants(d)};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec lv = h.bracket(basis_vec(d, i), dmap.apply(basis_vec(d, j)));
      Vec rv = h.bracket(dmap.apply(basis_vec(d, i)), basis_vec(d, j));
      for (int k = 0; k < d; ++k) {
        dl.left.at(i, j, k) = lv[k];
        dl.right.at(i, j, k) = rv[k];
      }
    }
  Check v = validate_di_leibniz(dl);
  if (!v) throw internal_error("differential di-Leibniz failed " + v.witness.axiom);
  return dl;
}

DiLeibniz direct_sum_di_leibniz(const StructureConstants& h, int n) {
  Check lc = validate_leibniz(h);
  if (!lc) throw precondition_error("direct sum construction needs a Leibniz algebra");
  const int d = h.dim, nd = n * d;
  DiLeibniz dl{StructureConstants(nd), StructureConstants(nd)};
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          for (int k = 0; k < d; ++k) {
            dl.left.at(t * d + i, s * d + j, t * d + k) = h.at(i, j, k);
            dl.right.at(t * d + i, s * d + j, s * d + k) = h.at(i, j, k);
          }
  Check v = validate_di_leibniz(dl);
  if (!v) throw internal_error("direct sum di-Leibniz failed " + v.witness.axiom);
  return dl;
}

Check is_associative(const StructureConstants& a) {
  const int d = a.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (!eq(a.bracket(a.bracket_basis(i, j), basis_vec(d, k)),
                a.bracket(basis_vec(d, i), a.bracket_basis(j, k))))
          return Check::fail("associativity", {i, j, k});
  return {};
}

Check is_associative_averaging(const StructureConstants& a, const LinearMap& p) {
  const int d = a.dim;
  if (p.rows != d || p.cols != d) throw input_error("operator dimension mismatch");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec pi = p.apply(basis_vec(d, i)), pj = p.apply(basis_vec(d, j));
      Vec lhs = a.bracket(pi, pj);
      if (!eq(lhs, p.apply(a.bracket(pi, basis_vec(d, j)))))
        return Check::fail("averaging-left", {i, j});
      if (!eq(lhs, p.apply(a.bracket(basis_vec(d, i), pj))))
        return Check::fail("averaging-right", {i, j});
    }
  return {};
}

StructureConstants commutator_bracket(const StructureConstants& assoc) {
  const int d = assoc.dim;
  StructureConstants out(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        out.at(i, j, k) = assoc.at(i, j, k) - assoc.at(j, i, k);
  return out;
}

}  // namespace avop
