#include "isorel/decompose.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <utility>

#include "isorel/duality.hpp"

namespace isorel {

namespace {

Matrix rows_matrix(const std::vector<Vec>& rows, std::size_t cols) {
  return Matrix::from_rows(rows, cols);
}

Subspace span_rows(const Matrix& m, std::size_t ambient) {
  return Subspace::from_rows(ambient, m);
}

// Gram matrix of an ordered family of rows under the form of s.
Matrix pairing_block(const BilinearSpace& s, const Matrix& a, const Matrix& b) {
  return a * s.form * b.transposed();
}

Vec negated_vec(const Vec& v) { return vec_scale(Scalar(-1), v); }

// Form induced on the rows of `basis` (the ambient form pulled back).
BilinearSpace restricted_space(const BilinearSpace& s, const Matrix& basis) {
  return BilinearSpace(basis.rows(), pairing_block(s, basis, basis), s.flavor);
}

}  // namespace

std::tuple<LinearRelation, LinearRelation, StageTrace> split_cartesian_biinjective(
    const LinearRelation& f) {
  if (f.target.flavor != Flavor::presymplectic)
    throw std::invalid_argument("split_cartesian_biinjective: expects presymplectic flavor");
  if (!is_isotropic(f))
    throw std::domain_error("split_cartesian_biinjective: relation is not isotropic");

  const BilinearSpace& sx = f.target;
  const BilinearSpace& sy = f.source;
  const Subspace rx = radical(sx), ry = radical(sy);
  const Subspace f0 = indeterminacy_f0(f), ker = kernel_0f(f);
  const Subspace f0_rx = intersect(f0, rx), ker_ry = intersect(ker, ry);

  // Symplectic halves of the indeterminacy/kernel, with dual partners; the
  // biinjective carrier is then chosen orthogonal to those planes, which makes
  // it a true direct complement of f0 (resp. 0f) inside its orthogonal.
  const Subspace x0 = complement_in(f0_rx, f0);
  const Subspace y0 = complement_in(ker_ry, ker);
  const std::vector<Vec> x0d = dual_basis_for(sx, x0.basis_vectors(), Subspace::full(sx.dim));
  const std::vector<Vec> y0d = dual_basis_for(sy, y0.basis_vectors(), Subspace::full(sy.dim));
  const Subspace ux = sum(x0, Subspace::from_vectors(sx.dim, x0d));
  const Subspace uy = sum(y0, Subspace::from_vectors(sy.dim, y0d));
  const Subspace xb = complement_in(f0_rx, orthogonal(sx, ux));
  const Subspace yb = complement_in(ker_ry, orthogonal(sy, uy));

  StageTrace tr;
  tr.x_0 = x0.basis();
  tr.y_0 = y0.basis();
  tr.x_0_dual = rows_matrix(x0d, sx.dim);
  tr.y_0_dual = rows_matrix(y0d, sy.dim);
  tr.x_b = xb.basis();
  tr.y_b = yb.basis();
  tr.f0_int_rx = f0_rx.basis();
  tr.ker_int_ry = ker_ry.basis();

  // Cartesian part f0 x 0f: in coordinates over the canonical bases of f0 and
  // 0f it is the full relation between zero-form spaces (both are isotropic).
  const LinearRelation f_c(restricted_space(sx, f0.basis()), restricted_space(sy, ker.basis()),
                           Subspace::full(f0.dim() + ker.dim()));

  // Biinjective part f cap (X_B x Y_B), rewritten over the carrier bases.
  const Subspace cut = intersect(f.graph, product_subspace(f, xb, yb));
  std::vector<Vec> restricted_rows;
  for (const Vec& v : cut.basis_vectors())
    restricted_rows.push_back(
        pair_vec(coords(xb, target_part(f, v)), coords(yb, source_part(f, v))));
  const LinearRelation f_b(
      restricted_space(sx, tr.x_b), restricted_space(sy, tr.y_b),
      Subspace::from_vectors(xb.dim() + yb.dim(), restricted_rows));

  tr.f_c = f_c;
  tr.f_b = f_b;
  return {f_c, f_b, std::move(tr)};
}

std::vector<DecompBlock> decompose_cartesian(const LinearRelation& f_c,
                                             const StageTrace& trace) {
  if (f_c.graph.dim() != f_c.target.dim + f_c.source.dim)
    throw std::invalid_argument("decompose_cartesian: relation is not a full product");
  std::vector<DecompBlock> out;
  for (std::size_t i = 0; i < trace.x_0.rows(); ++i)
    out.push_back({Tag::I2, {trace.x_0.row(i), trace.x_0_dual.row(i)}, {}});
  for (std::size_t i = 0; i < trace.y_0.rows(); ++i)
    out.push_back({Tag::I3, {}, {trace.y_0.row(i), trace.y_0_dual.row(i)}});
  for (std::size_t i = 0; i < trace.f0_int_rx.rows(); ++i)
    out.push_back({Tag::I8, {trace.f0_int_rx.row(i)}, {}});
  for (std::size_t i = 0; i < trace.ker_int_ry.rows(); ++i)
    out.push_back({Tag::I9, {}, {trace.ker_int_ry.row(i)}});
  return out;
}

std::vector<DecompBlock> decompose_biinjective(const LinearRelation& g, StageTrace& tr) {
  if (!is_biinjective(g))
    throw std::invalid_argument("decompose_biinjective: relation is not biinjective");

  const BilinearSpace& sx = g.target;
  const BilinearSpace& sy = g.source;
  const Subspace rx = radical(sx), ry = radical(sy);
  const Subspace dom = domain_Xf(g), img = image_fY(g);
  const Subspace dom_ry = intersect(dom, ry), img_rx = intersect(img, rx);

  // Radical vectors exchanged with radical vectors: the I7 part.
  const Subspace xr = intersect(image_of(g, dom_ry), rx);
  const std::vector<Vec> xr_rows = xr.basis_vectors();
  std::vector<Vec> yr_rows;
  for (const Vec& v : xr_rows) yr_rows.push_back(apply_inv_vec(g, v));
  const Subspace yr = Subspace::from_vectors(sy.dim, yr_rows);

  // Radical vectors sent to (I13) or received from (I12) symplectic partners.
  const Subspace yi = complement_in(yr, dom_ry);
  const Subspace xi = complement_in(xr, img_rx);
  const std::vector<Vec> yi_rows = yi.basis_vectors();
  const std::vector<Vec> xi_rows = xi.basis_vectors();

  // Radical vectors untouched by the relation: I11 / I10.
  const Subspace yr2 = complement_in(sum(yr, yi), ry);
  const Subspace xr2 = complement_in(sum(xr, xi), rx);

  std::vector<Vec> xig_rows;
  for (const Vec& v : xi_rows) xig_rows.push_back(apply_inv_vec(g, v));
  const Subspace xig = Subspace::from_vectors(sy.dim, xig_rows);
  std::vector<Vec> gyi_rows;
  for (const Vec& v : yi_rows) gyi_rows.push_back(apply_vec(g, v));
  const Subspace gyi = Subspace::from_vectors(sx.dim, gyi_rows);

  // Rest of the domain: its radical defect feeds I6, its symplectic core I1.
  const Subspace w = complement_in(sum(sum(yr, yi), xig), dom);
  const Subspace yl = intersect(w, orthogonal(sy, w));
  const Subspace ys = complement_in(yl, w);
  const std::vector<Vec> yl_rows = yl.basis_vectors();
  std::vector<Vec> xl_rows;
  for (const Vec& v : yl_rows) xl_rows.push_back(apply_vec(g, v));
  const Subspace xl = Subspace::from_vectors(sx.dim, xl_rows);
  std::vector<Vec> xs_rows;
  for (const Vec& v : ys.basis_vectors()) xs_rows.push_back(apply_vec(g, v));
  const Subspace xs = Subspace::from_vectors(sx.dim, xs_rows);

  // Symplectic complements of the radicals, each containing its side's blocks.
  const Subspace cy = sum(sum(xig, yl), ys);
  const Subspace ey = sum(cy, complement_in(sum(cy, ry), Subspace::full(sy.dim)));
  const Subspace cx = sum(sum(gyi, xl), xs);
  const Subspace ex = sum(cx, complement_in(sum(cx, rx), Subspace::full(sx.dim)));

  // Joint aligned duals for the isotropic seeds, chosen orthogonal to the
  // symplectic core so all resulting planes are pairwise orthogonal.
  std::vector<Vec> uy = xig_rows;
  uy.insert(uy.end(), yl_rows.begin(), yl_rows.end());
  const std::vector<Vec> uyd = dual_basis_for(sy, uy, intersect(ey, orthogonal(sy, ys)));
  const std::vector<Vec> xig_dual(uyd.begin(),
                                  uyd.begin() + static_cast<std::ptrdiff_t>(xig_rows.size()));
  const std::vector<Vec> yl_dual(uyd.begin() + static_cast<std::ptrdiff_t>(xig_rows.size()),
                                 uyd.end());
  std::vector<Vec> ux = gyi_rows;
  ux.insert(ux.end(), xl_rows.begin(), xl_rows.end());
  const std::vector<Vec> uxd = dual_basis_for(sx, ux, intersect(ex, orthogonal(sx, xs)));
  const std::vector<Vec> gyi_dual(uxd.begin(),
                                  uxd.begin() + static_cast<std::ptrdiff_t>(gyi_rows.size()));
  const std::vector<Vec> xl_dual(uxd.begin() + static_cast<std::ptrdiff_t>(gyi_rows.size()),
                                 uxd.end());

  // What is left of E_Y / E_X carries zero relation: I5 / I4.
  const Subspace used_y =
      sum(sum(Subspace::from_vectors(sy.dim, uy), Subspace::from_vectors(sy.dim, uyd)), ys);
  const Subspace ys2 = intersect(ey, orthogonal(sy, used_y));
  const Subspace used_x =
      sum(sum(Subspace::from_vectors(sx.dim, ux), Subspace::from_vectors(sx.dim, uxd)), xs);
  const Subspace xs2 = intersect(ex, orthogonal(sx, used_x));

  tr.x_r = rows_matrix(xr_rows, sx.dim);
  tr.y_r = rows_matrix(yr_rows, sy.dim);
  tr.x_i = rows_matrix(xi_rows, sx.dim);
  tr.y_i = rows_matrix(yi_rows, sy.dim);
  tr.x_r_extra = xr2.basis();
  tr.y_r_extra = yr2.basis();
  tr.x_ig = rows_matrix(xig_rows, sy.dim);
  tr.g_yi = rows_matrix(gyi_rows, sx.dim);
  tr.y_l = rows_matrix(yl_rows, sy.dim);
  tr.y_s = ys.basis();
  tr.x_l = rows_matrix(xl_rows, sx.dim);
  tr.x_s = rows_matrix(xs_rows, sx.dim);
  tr.x_ig_dual = rows_matrix(xig_dual, sy.dim);
  tr.y_l_dual = rows_matrix(yl_dual, sy.dim);
  tr.g_yi_dual = rows_matrix(gyi_dual, sx.dim);
  tr.x_l_dual = rows_matrix(xl_dual, sx.dim);
  tr.e_y = ey.basis();
  tr.e_x = ex.basis();
  tr.y_s_extra = ys2.basis();
  tr.x_s_extra = xs2.basis();

  std::vector<DecompBlock> out;
  for (const auto& [q, p] : symplectic_basis(sx, xs))
    out.push_back({Tag::I1, {q, p}, {apply_inv_vec(g, q), apply_inv_vec(g, p)}});
  for (const auto& [q, p] : symplectic_basis(sx, xs2)) out.push_back({Tag::I4, {q, p}, {}});
  for (const auto& [q, p] : symplectic_basis(sy, ys2)) out.push_back({Tag::I5, {}, {q, p}});
  // (q, p) = (-z*, z) turns the dual pairing omega(z, z*) = 1 into the
  // standard omega(q, p) = 1 while keeping the graph line at the p slot.
  for (std::size_t j = 0; j < yl_rows.size(); ++j)
    out.push_back({Tag::I6,
                   {negated_vec(xl_dual[j]), xl_rows[j]},
                   {negated_vec(yl_dual[j]), yl_rows[j]}});
  for (std::size_t j = 0; j < xr_rows.size(); ++j)
    out.push_back({Tag::I7, {xr_rows[j]}, {yr_rows[j]}});
  for (std::size_t j = 0; j < xr2.dim(); ++j) out.push_back({Tag::I10, {tr.x_r_extra.row(j)}, {}});
  for (std::size_t j = 0; j < yr2.dim(); ++j) out.push_back({Tag::I11, {}, {tr.y_r_extra.row(j)}});
  for (std::size_t j = 0; j < yi_rows.size(); ++j)
    out.push_back({Tag::I12, {gyi_rows[j], gyi_dual[j]}, {yi_rows[j]}});
  for (std::size_t j = 0; j < xi_rows.size(); ++j)
    out.push_back({Tag::I13, {xi_rows[j]}, {xig_rows[j], xig_dual[j]}});
  return out;
}

DecompositionCertificate decompose(const LinearRelation& f) {
  if (f.target.flavor == Flavor::poisson) {
    const LinearRelation dual = annihilator(f);
    if (!is_isotropic(dual)) throw std::domain_error("decompose: relation is not coisotropic");
    DecompositionCertificate cert = dualize_certificate(decompose(dual), dual);
    if (!verify_certificate(f, cert))
      throw std::logic_error("decompose: dualized certificate failed self-verification");
    return cert;
  }
  if (!is_isotropic(f)) throw std::domain_error("decompose: relation is not isotropic");

  auto [f_c, f_b, tr] = split_cartesian_biinjective(f);
  std::vector<DecompBlock> blocks = decompose_cartesian(f_c, tr);
  {
    std::vector<DecompBlock> bi = decompose_biinjective(f_b, tr);
    const Matrix xbt = tr.x_b.transposed();
    const Matrix ybt = tr.y_b.transposed();
    for (DecompBlock& b : bi) {
      for (Vec& v : b.target_vecs) v = xbt.apply(v);
      for (Vec& v : b.source_vecs) v = ybt.apply(v);
      blocks.push_back(std::move(b));
    }
  }
  // Tag order; within a tag, construction order already follows the pivots of
  // the defining canonical bases.
  std::stable_sort(blocks.begin(), blocks.end(), [](const DecompBlock& a, const DecompBlock& b) {
    return tag_index(a.tag) < tag_index(b.tag);
  });

  MultiplicityVector mult{};
  std::size_t tcount = 0, scount = 0;
  for (const DecompBlock& b : blocks) {
    ++mult.n[tag_index(b.tag)];
    tcount += b.target_vecs.size();
    scount += b.source_vecs.size();
  }
  if (tcount != f.target.dim || scount != f.source.dim)
    throw std::logic_error("decompose: block dimensions do not add up");

  Matrix ucols_x(f.target.dim, f.target.dim), ucols_y(f.source.dim, f.source.dim);
  std::size_t cx = 0, cy = 0;
  for (const DecompBlock& b : blocks) {
    for (const Vec& v : b.target_vecs) {
      for (std::size_t i = 0; i < f.target.dim; ++i) ucols_x.at(i, cx) = v[i];
      ++cx;
    }
    for (const Vec& v : b.source_vecs) {
      for (std::size_t i = 0; i < f.source.dim; ++i) ucols_y.at(i, cy) = v[i];
      ++cy;
    }
  }
  const auto p = ucols_x.inverse();
  const auto q = ucols_y.inverse();
  if (!p || !q) throw std::logic_error("decompose: assembled block basis is singular");

  DecompositionCertificate cert{*p, *q, mult, std::move(tr), Flavor::presymplectic};
  if (!(mult == multiplicities(compute_invariants(f))))
    throw std::logic_error("decompose: constructive and invariant multiplicities disagree");
  if (!verify_certificate(f, cert))
    throw std::logic_error("decompose: certificate failed self-verification");
  return cert;
}

bool verify_certificate(const LinearRelation& f, const DecompositionCertificate& cert) {
  if (cert.flavor != f.target.flavor) return false;
  if (cert.p.rows() != f.target.dim || cert.p.cols() != f.target.dim) return false;
  if (cert.q.rows() != f.source.dim || cert.q.cols() != f.source.dim) return false;
  if (!cert.p.inverse() || !cert.q.inverse()) return false;
  for (int t = 0; t < kTypeCount; ++t)
    if (cert.mult.n[t] < 0) return false;
  const LinearRelation moved = apply_iso_pair(f, cert.p, cert.q);
  const LinearRelation canon = canonical_sum(cert.mult, f.target.flavor);
  return moved.target == canon.target && moved.source == canon.source &&
         moved.graph == canon.graph;
}

namespace {

// dim-additive sum equality: parts are independent and fill `whole`.
bool direct_sum_is(std::initializer_list<const Subspace*> parts, const Subspace& whole) {
  std::size_t total = 0;
  Subspace acc = Subspace::zero(whole.ambient_dim());
  for (const Subspace* p : parts) {
    if (p->ambient_dim() != whole.ambient_dim()) return false;
    total += p->dim();
    acc = sum(acc, *p);
  }
  return total == whole.dim() && acc == whole;
}

bool rows_match_through(const LinearRelation& g, const Matrix& src, const Matrix& dst,
                        bool forward) {
  if (src.rows() != dst.rows()) return false;
  for (std::size_t j = 0; j < src.rows(); ++j) {
    const Vec got = forward ? apply_vec(g, src.row(j)) : apply_inv_vec(g, src.row(j));
    if (got != dst.row(j)) return false;
  }
  return true;
}

bool is_identity_block(const Matrix& m, std::size_t n) {
  return m.rows() == n && m.cols() == n && m == Matrix::identity(n);
}

}  // namespace

std::vector<std::string> trace_violations(const LinearRelation& input,
                                          const DecompositionCertificate& cert) {
  std::vector<std::string> bad;
  const auto check = [&bad](bool ok, const char* what) {
    if (!ok) bad.emplace_back(what);
  };
  try {
    const LinearRelation f =
        input.target.flavor == Flavor::poisson ? annihilator(input) : input;
    const StageTrace& tr = cert.trace;
    const BilinearSpace& sx = f.target;
    const BilinearSpace& sy = f.source;
    const Subspace rx = radical(sx), ry = radical(sy);
    const Subspace f0 = indeterminacy_f0(f), ker = kernel_0f(f);
    const Subspace dom = domain_Xf(f), img = image_fY(f);

    const Subspace x0 = span_rows(tr.x_0, sx.dim), y0 = span_rows(tr.y_0, sy.dim);
    const Subspace x0d = span_rows(tr.x_0_dual, sx.dim), y0d = span_rows(tr.y_0_dual, sy.dim);
    const Subspace xb = span_rows(tr.x_b, sx.dim), yb = span_rows(tr.y_b, sy.dim);
    const Subspace f0rx = span_rows(tr.f0_int_rx, sx.dim);
    const Subspace kerry = span_rows(tr.ker_int_ry, sy.dim);

    check(f0rx == intersect(f0, rx), "A1: f0 cap R_X differs from the stored basis");
    check(kerry == intersect(ker, ry), "A1: 0f cap R_Y differs from the stored basis");
    check(direct_sum_is({&x0, &f0rx}, f0), "A1: f0 != X_0 (+) (f0 cap R_X)");
    check(direct_sum_is({&y0, &kerry}, ker), "A1: 0f != Y_0 (+) (0f cap R_Y)");
    const Subspace ker_perp = orthogonal(sy, ker), f0_perp = orthogonal(sx, f0);
    check(direct_sum_is({&yb, &ker}, ker_perp), "A2: Y_B (+) 0f != (0f)^perp");
    check(direct_sum_is({&xb, &f0}, f0_perp), "A2: X_B (+) f0 != (f0)^perp");
    check(is_subspace_of(dom, ker_perp), "A3: Xf not inside (0f)^perp");
    check(is_subspace_of(img, f0_perp), "A3: fY not inside (f0)^perp");
    const Subspace dom_yb = intersect(dom, yb), img_xb = intersect(img, xb);
    check(direct_sum_is({&ker, &dom_yb}, dom), "A4: Xf != 0f (+) (Xf cap Y_B)");
    check(direct_sum_is({&f0, &img_xb}, img), "A4: fY != f0 (+) (fY cap X_B)");
    const Subspace cart = product_subspace(f, f0, ker);
    const Subspace bipart = intersect(f.graph, product_subspace(f, xb, yb));
    check(direct_sum_is({&cart, &bipart}, f.graph),
          "A5: f != (f0 x 0f) (+) (f cap (X_B x Y_B))");
    check(direct_sum_is({&ker_perp, &y0d}, Subspace::full(sy.dim)),
          "A6: (0f)^perp (+) Y_0* != Y");
    check(direct_sum_is({&f0_perp, &x0d}, Subspace::full(sx.dim)),
          "A6: (f0)^perp (+) X_0* != X");
    check(direct_sum_is({&y0, &y0d, &kerry, &yb}, Subspace::full(sy.dim)),
          "A7: Y != Y_0 (+) Y_0* (+) (0f cap R_Y) (+) Y_B");
    check(direct_sum_is({&x0, &x0d, &f0rx, &xb}, Subspace::full(sx.dim)),
          "A7: X != X_0 (+) X_0* (+) (f0 cap R_X) (+) X_B");
    check(is_identity_block(pairing_block(sy, tr.y_0, tr.y_0_dual), tr.y_0.rows()),
          "A8: pairing of Y_0 with Y_0* is not the identity");
    check(is_identity_block(pairing_block(sx, tr.x_0, tr.x_0_dual), tr.x_0.rows()),
          "A8: pairing of X_0 with X_0* is not the identity");
    check(pairing_block(sy, tr.y_0_dual, tr.y_0_dual).is_zero(), "A8: Y_0* is not isotropic");
    check(pairing_block(sx, tr.x_0_dual, tr.x_0_dual).is_zero(), "A8: X_0* is not isotropic");

    // Recompute the two restricted relations from the stored carriers.
    const LinearRelation expect_fc(restricted_space(sx, f0.basis()),
                                   restricted_space(sy, ker.basis()),
                                   Subspace::full(f0.dim() + ker.dim()));
    check(tr.f_c == expect_fc, "A: stored f_C differs from f0 x 0f");
    std::vector<Vec> restricted_rows;
    for (const Vec& v : bipart.basis_vectors())
      restricted_rows.push_back(
          pair_vec(coords(xb, target_part(f, v)), coords(yb, source_part(f, v))));
    const LinearRelation expect_fb(
        restricted_space(sx, tr.x_b), restricted_space(sy, tr.y_b),
        Subspace::from_vectors(xb.dim() + yb.dim(), restricted_rows));
    check(tr.f_b == expect_fb, "A: stored f_B differs from f cap (X_B x Y_B)");

    // Stage B lives in the coordinates of f_B.
    const LinearRelation& g = tr.f_b;
    const BilinearSpace& bx = g.target;
    const BilinearSpace& by = g.source;
    const Subspace brx = radical(bx), bry = radical(by);
    const Subspace bdom = domain_Xf(g), bimg = image_fY(g);
    const Subspace dom_ry = intersect(bdom, bry), img_rx = intersect(bimg, brx);

    const Subspace xr = span_rows(tr.x_r, bx.dim), yr = span_rows(tr.y_r, by.dim);
    const Subspace xi = span_rows(tr.x_i, bx.dim), yi = span_rows(tr.y_i, by.dim);
    const Subspace xr2 = span_rows(tr.x_r_extra, bx.dim), yr2 = span_rows(tr.y_r_extra, by.dim);
    const Subspace xig = span_rows(tr.x_ig, by.dim), gyi = span_rows(tr.g_yi, bx.dim);
    const Subspace yl = span_rows(tr.y_l, by.dim), ys = span_rows(tr.y_s, by.dim);
    const Subspace xl = span_rows(tr.x_l, bx.dim), xs = span_rows(tr.x_s, bx.dim);
    const Subspace xigd = span_rows(tr.x_ig_dual, by.dim), yld = span_rows(tr.y_l_dual, by.dim);
    const Subspace gyid = span_rows(tr.g_yi_dual, bx.dim), xld = span_rows(tr.x_l_dual, bx.dim);
    const Subspace ey = span_rows(tr.e_y, by.dim), ex = span_rows(tr.e_x, bx.dim);
    const Subspace ys2 = span_rows(tr.y_s_extra, by.dim), xs2 = span_rows(tr.x_s_extra, bx.dim);

    check(is_biinjective(g), "B: f_B is not biinjective");
    check(xr == intersect(image_of(g, dom_ry), brx),
          "B1: X_R != g(Xf cap R_Y) cap R_X");
    check(yr == preimage_of(g, xr), "B1: Y_R != g^-1(X_R)");
    check(rows_match_through(g, tr.y_r, tr.x_r, true), "B1: Y_R rows are not g-aligned");
    check(direct_sum_is({&yr, &yi}, dom_ry), "B2: Xf cap R_Y != Y_R (+) Y_I");
    check(direct_sum_is({&xr, &xi}, img_rx), "B2: fY cap R_X != X_R (+) X_I");
    check(intersect(xig, bry).dim() == 0, "B3: X_Ig meets R_Y");
    check(intersect(gyi, brx).dim() == 0, "B3: gY_I meets R_X");
    check(rows_match_through(g, tr.x_ig, tr.x_i, true), "B3: X_Ig rows are not g-aligned");
    check(rows_match_through(g, tr.y_i, tr.g_yi, true), "B3: gY_I rows are not g-aligned");
    check(is_isotropic_subspace(by, xig), "B4: X_Ig is not isotropic");
    check(is_isotropic_subspace(bx, gyi), "B4: gY_I is not isotropic");
    check(direct_sum_is({&yr, &yi, &yr2}, bry), "B5: R_Y != Y_R (+) Y_I (+) Y_R'");
    check(direct_sum_is({&xr, &xi, &xr2}, brx), "B5: R_X != X_R (+) X_I (+) X_R'");
    const Subspace wsub = sum(yl, ys);
    check(direct_sum_is({&yr, &yi, &xig, &yl, &ys}, bdom),
          "B6: Xf != Y_R (+) Y_I (+) X_Ig (+) Y_L (+) Y_S");
    check(yl == intersect(wsub, orthogonal(by, wsub)), "B6: Y_L is not the radical of W");
    check(is_symplectic_subspace(by, ys), "B6: Y_S is not symplectic");
    const Subspace gw = sum(xl, xs);
    check(direct_sum_is({&xr, &xi, &gyi, &xl, &xs}, bimg),
          "B7: fY != X_R (+) X_I (+) gY_I (+) X_L (+) X_S");
    check(xl == intersect(gw, orthogonal(bx, gw)), "B7: X_L is not the radical of g(W)");
    check(is_symplectic_subspace(bx, xs), "B7: X_S is not symplectic");
    check(rows_match_through(g, tr.y_l, tr.x_l, true), "B7: X_L rows are not g-aligned");
    check(rows_match_through(g, tr.y_s, tr.x_s, true), "B7: X_S rows are not g-aligned");
    check(pairing_block(bx, tr.g_yi, tr.x_l).is_zero(), "B8: gY_I not orthogonal to X_L");
    check(pairing_block(bx, tr.g_yi, tr.x_s).is_zero(), "B8: gY_I not orthogonal to X_S");
    check(pairing_block(bx, tr.x_l, tr.x_s).is_zero(), "B8: X_L not orthogonal to X_S");
    check(pairing_block(by, tr.x_ig, tr.y_l).is_zero(), "B8: X_Ig not orthogonal to Y_L");
    check(pairing_block(by, tr.x_ig, tr.y_s).is_zero(), "B8: X_Ig not orthogonal to Y_S");
    check(pairing_block(by, tr.y_l, tr.y_s).is_zero(), "B8: Y_L not orthogonal to Y_S");
    check(is_subspace_of(xig, ey) && is_subspace_of(yl, ey) && is_subspace_of(ys, ey),
          "B9: E_Y does not contain X_Ig, Y_L, Y_S");
    check(direct_sum_is({&ey, &bry}, Subspace::full(by.dim)), "B9: E_Y (+) R_Y != Y");
    check(is_symplectic_subspace(by, ey), "B9: E_Y is not symplectic");
    check(is_subspace_of(gyi, ex) && is_subspace_of(xl, ex) && is_subspace_of(xs, ex),
          "B9: E_X does not contain gY_I, X_L, X_S");
    check(direct_sum_is({&ex, &brx}, Subspace::full(bx.dim)), "B9: E_X (+) R_X != X");
    check(is_symplectic_subspace(bx, ex), "B9: E_X is not symplectic");
    check(is_identity_block(pairing_block(by, tr.x_ig, tr.x_ig_dual), tr.x_ig.rows()),
          "B10: pairing of X_Ig with its dual is not the identity");
    check(is_identity_block(pairing_block(by, tr.y_l, tr.y_l_dual), tr.y_l.rows()),
          "B10: pairing of Y_L with its dual is not the identity");
    check(pairing_block(by, tr.x_ig, tr.y_l_dual).is_zero(),
          "B10: X_Ig pairs with the Y_L duals");
    check(pairing_block(by, tr.y_l, tr.x_ig_dual).is_zero(),
          "B10: Y_L pairs with the X_Ig duals");
    check(pairing_block(by, vstack(tr.x_ig_dual, tr.y_l_dual),
                        vstack(tr.x_ig_dual, tr.y_l_dual))
              .is_zero(),
          "B10: Y-side dual family is not isotropic");
    check(pairing_block(by, vstack(tr.x_ig_dual, tr.y_l_dual), tr.y_s).is_zero(),
          "B10: Y-side duals are not orthogonal to Y_S");
    check(is_subspace_of(xigd, ey) && is_subspace_of(yld, ey),
          "B10: Y-side duals are not inside E_Y");
    check(is_identity_block(pairing_block(bx, tr.g_yi, tr.g_yi_dual), tr.g_yi.rows()),
          "B10: pairing of gY_I with its dual is not the identity");
    check(is_identity_block(pairing_block(bx, tr.x_l, tr.x_l_dual), tr.x_l.rows()),
          "B10: pairing of X_L with its dual is not the identity");
    check(pairing_block(bx, tr.g_yi, tr.x_l_dual).is_zero(),
          "B10: gY_I pairs with the X_L duals");
    check(pairing_block(bx, tr.x_l, tr.g_yi_dual).is_zero(),
          "B10: X_L pairs with the gY_I duals");
    check(pairing_block(bx, vstack(tr.g_yi_dual, tr.x_l_dual),
                        vstack(tr.g_yi_dual, tr.x_l_dual))
              .is_zero(),
          "B10: X-side dual family is not isotropic");
    check(pairing_block(bx, vstack(tr.g_yi_dual, tr.x_l_dual), tr.x_s).is_zero(),
          "B10: X-side duals are not orthogonal to X_S");
    check(is_subspace_of(gyid, ex) && is_subspace_of(xld, ex),
          "B10: X-side duals are not inside E_X");
    const Subspace used_y = sum(sum(sum(xig, xigd), sum(yl, yld)), ys);
    check(is_symplectic_subspace(by, used_y),
          "B11: (X_Ig (+) X_Ig*) (+) (Y_L (+) Y_L*) (+) Y_S is not symplectic");
    check(ys2 == intersect(ey, orthogonal(by, used_y)),
          "B11: Y_S' is not the leftover orthogonal block of E_Y");
    check(is_symplectic_subspace(by, ys2), "B11: Y_S' is not symplectic");
    const Subspace used_x = sum(sum(sum(gyi, gyid), sum(xl, xld)), xs);
    check(is_symplectic_subspace(bx, used_x),
          "B11: (gY_I (+) gY_I*) (+) (X_L (+) X_L*) (+) X_S is not symplectic");
    check(xs2 == intersect(ex, orthogonal(bx, used_x)),
          "B11: X_S' is not the leftover orthogonal block of E_X");
    check(is_symplectic_subspace(bx, xs2), "B11: X_S' is not symplectic");
    check(direct_sum_is({&yr, &yr2, &yi, &xig, &xigd, &yl, &yld, &ys, &ys2},
                        Subspace::full(by.dim)),
          "B12: the nine Y summands do not fill Y");
    check(direct_sum_is({&xr, &xr2, &xi, &gyi, &gyid, &xl, &xld, &xs, &xs2},
                        Subspace::full(bx.dim)),
          "B12: the nine X summands do not fill X");

    // Nine-way splitting of the product, and of the graph along it.
    const std::vector<Subspace> sectors = {
        product_subspace(g, xr, yr),
        product_subspace(g, xr2, Subspace::zero(by.dim)),
        product_subspace(g, Subspace::zero(bx.dim), yr2),
        product_subspace(g, xi, sum(xig, xigd)),
        product_subspace(g, sum(gyi, gyid), yi),
        product_subspace(g, sum(xl, xld), sum(yl, yld)),
        product_subspace(g, xs, ys),
        product_subspace(g, xs2, Subspace::zero(by.dim)),
        product_subspace(g, Subspace::zero(bx.dim), ys2)};
    std::size_t sector_total = 0;
    Subspace sector_sum = Subspace::zero(bx.dim + by.dim);
    Subspace graph_sum = Subspace::zero(bx.dim + by.dim);
    std::size_t graph_total = 0;
    for (const Subspace& s : sectors) {
      sector_total += s.dim();
      sector_sum = sum(sector_sum, s);
      const Subspace piece = intersect(g.graph, s);
      graph_total += piece.dim();
      graph_sum = sum(graph_sum, piece);
    }
    check(sector_total == bx.dim + by.dim && sector_sum == Subspace::full(bx.dim + by.dim),
          "B13: the nine sectors do not split X x Y");
    check(graph_total == g.graph.dim() && graph_sum == g.graph,
          "B13: the graph does not split along the nine sectors");
  } catch (const std::exception& e) {
    bad.push_back(std::string("trace inspection aborted: ") + e.what());
  }
  return bad;
}

bool verify_trace(const LinearRelation& f, const DecompositionCertificate& cert) {
  return trace_violations(f, cert).empty();
}

bool is_isomorphic(const LinearRelation& f, const LinearRelation& g) {
  if (f.target.flavor != g.target.flavor)
    throw std::invalid_argument("is_isomorphic: relations carry different flavors");
  const auto key = [](const LinearRelation& r) {
    const LinearRelation h = r.target.flavor == Flavor::poisson ? annihilator(r) : r;
    return multiplicities(compute_invariants(h));
  };
  return key(f) == key(g);
}

}  // namespace isorel
