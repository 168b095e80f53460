// Acceptance gates for the library: eight criteria, one PASS/FAIL line each.
// Exits with the number of failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "isorel/catalog.hpp"
#include "isorel/decompose.hpp"
#include "isorel/duality.hpp"
#include "isorel/invariants.hpp"
#include "isorel/json_io.hpp"

using namespace isorel;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    ok = false;
    if (detail.empty()) detail = why;
  }
};

// Aggregated across criteria 3 and 4 for the trace gate.
struct TraceStats {
  long runs = 0;
  long violated_runs = 0;
  std::string first_example;
} g_traces;

bool audited_roundtrip(const LinearRelation& f, const MultiplicityVector& expect,
                       std::string& err) {
  const DecompositionCertificate cert = decompose(f);
  if (!(cert.mult.n == expect.n)) {
    err = "recovered multiplicities differ from the generator's";
    return false;
  }
  if (!verify_certificate(f, cert)) {
    err = "certificate failed verification";
    return false;
  }
  ++g_traces.runs;
  const std::vector<std::string> violations = trace_violations(f, cert);
  if (!violations.empty()) {
    ++g_traces.violated_runs;
    if (g_traces.first_example.empty()) g_traces.first_example = violations.front();
    err = "trace violation: " + violations.front();
    return false;
  }
  return true;
}

Json load_golden(const std::string& name, Outcome& o) {
  const std::string path = std::string(ISOREL_DATA_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in.good()) {
    o.fail("missing golden file " + path);
    return Json();
  }
  return Json::parse(in);
}

// --- criterion 1: embedded matrix equals the golden copy, unimodular, integral inverse.
Outcome criterion_matrix_fidelity() {
  Outcome o;
  const Json golden = load_golden("m_matrix.json", o);
  if (!o.ok) return o;
  const ClassificationMatrix& cm = classification_matrix();
  Matrix m(13, 13);
  for (int i = 0; i < 13; ++i)
    for (int j = 0; j < 13; ++j) {
      if (cm.m[i][j] != golden["matrix"][i][j].get<long>())
        o.fail("matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               ") differs from the golden file");
      m.at(i, j) = cm.m[i][j];
    }
  const Scalar d = m.det();
  if (d != 1 && d != -1) o.fail("determinant is not +-1");
  const auto inv = m.inverse();
  if (!inv) {
    o.fail("matrix is singular");
    return o;
  }
  for (int i = 0; i < 13; ++i)
    for (int j = 0; j < 13; ++j) {
      if (!is_integer(inv->at(i, j))) o.fail("inverse is not integral");
      else if (to_long(inv->at(i, j)) != cm.m_inv[i][j] ||
               cm.m_inv[i][j] != golden["inverse"][i][j].get<long>())
        o.fail("inverse entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               ") differs");
    }
  return o;
}

// --- criterion 2: canonical invariant vectors are distinct, exhaust the columns,
// and sit at the anchored positions.
Outcome criterion_column_bijection() {
  Outcome o;
  const ClassificationMatrix& cm = classification_matrix();
  std::set<std::array<long, 13>> seen;
  std::array<bool, 13> used{};
  for (int t = 0; t < kTypeCount; ++t) {
    const InvariantVector k =
        compute_invariants(canonical_indecomposable(tag_from_index(t), Flavor::presymplectic));
    if (!seen.insert(k.k).second) o.fail("two canonical models share an invariant vector");
    const int c = cm.column_of[t];
    if (c < 0 || c >= 13 || used[c]) {
      o.fail("column assignment is not a bijection");
      continue;
    }
    used[c] = true;
    for (int r = 0; r < 13; ++r)
      if (cm.m[r][c] != k.k[r])
        o.fail(std::string("column of ") + type_descriptor(tag_from_index(t)).label +
               " does not equal its invariant vector");
  }
  const auto anchor = [&](Tag t, int col_1based, const char* label) {
    if (cm.column_of[tag_index(t)] + 1 != col_1based)
      o.fail(std::string("anchor ") + label + " -> column " + std::to_string(col_1based) +
             " violated");
  };
  anchor(Tag::I1, 11, "I1");
  anchor(Tag::I2, 2, "I2");
  anchor(Tag::I3, 1, "I3");
  anchor(Tag::I6, 10, "I6");
  return o;
}

// --- criterion 3: every multiplicity vector with <= 3 nonzero entries, each <= 2.
Outcome criterion_exhaustive_small(long& cases) {
  Outcome o;
  std::string err;
  std::vector<MultiplicityVector> all;
  all.push_back(MultiplicityVector{});  // the zero relation
  for (int a = 0; a < 13; ++a)
    for (long ca = 1; ca <= 2; ++ca) {
      MultiplicityVector na{};
      na.n[a] = ca;
      all.push_back(na);
      for (int b = a + 1; b < 13; ++b)
        for (long cb = 1; cb <= 2; ++cb) {
          MultiplicityVector nb = na;
          nb.n[b] = cb;
          all.push_back(nb);
          for (int c = b + 1; c < 13; ++c)
            for (long cc = 1; cc <= 2; ++cc) {
              MultiplicityVector nc = nb;
              nc.n[c] = cc;
              all.push_back(nc);
            }
        }
    }
  cases = static_cast<long>(all.size());
  if (cases != 2627) o.fail("expected 2627 cases, enumerated " + std::to_string(cases));
  long failed = 0;
  for (const MultiplicityVector& n : all) {
    if (!audited_roundtrip(canonical_sum(n, Flavor::presymplectic), n, err)) {
      ++failed;
      o.fail(err);
    }
  }
  if (failed > 0) o.detail += " (" + std::to_string(failed) + " of " +
                              std::to_string(cases) + " cases failed)";
  return o;
}

// --- criterion 4: 1000 seeded random conjugations, total dimension <= 12 per side.
Outcome criterion_random_roundtrip(long& cases) {
  Outcome o;
  std::mt19937_64 rng(0x1505e11ull);
  std::string err;
  const auto side_dims = [](const MultiplicityVector& n) {
    std::size_t tx = 0, sy = 0;
    for (int t = 0; t < kTypeCount; ++t) {
      const TypeDescriptor& d = type_descriptor(tag_from_index(t));
      const auto dim_of = [](SpaceKind k) -> std::size_t {
        return k == SpaceKind::trivial ? 0 : (k == SpaceKind::zero_form_line ? 1 : 2);
      };
      tx += n.n[t] * dim_of(d.target_kind);
      sy += n.n[t] * dim_of(d.source_kind);
    }
    return std::pair<std::size_t, std::size_t>(tx, sy);
  };
  cases = 0;
  long failed = 0;
  while (cases < 1000) {
    MultiplicityVector n{};
    const int picks = 1 + static_cast<int>(rng() % 4);
    for (int p = 0; p < picks; ++p) n.n[rng() % 13] += 1 + static_cast<long>(rng() % 2);
    const auto [tx, sy] = side_dims(n);
    if (tx > 12 || sy > 12) continue;
    const Flavor flavor = (cases % 2 == 0) ? Flavor::presymplectic : Flavor::poisson;
    const LinearRelation f = random_instance(n, flavor, rng()).relation;
    ++cases;
    if (!audited_roundtrip(f, n, err)) {
      ++failed;
      o.fail(err);
    }
  }
  if (failed > 0) o.detail += " (" + std::to_string(failed) + " of 1000 cases failed)";
  return o;
}

// --- criterion 5 support: random isotropic subspaces by greedy growth.
Subspace grow_isotropic(const BilinearSpace& total, std::size_t want, std::mt19937_64& rng) {
  Subspace l = Subspace::zero(total.dim);
  while (l.dim() < want) {
    const Subspace perp = orthogonal(total, l);
    Vec candidate;
    bool found = false;
    for (int attempt = 0; attempt < 8 && !found; ++attempt) {
      Vec v(total.dim, Scalar(0));
      for (std::size_t r = 0; r < perp.dim(); ++r) {
        const long c = static_cast<long>(rng() % 5) - 2;
        if (c != 0) v = vec_add(v, vec_scale(Scalar(c), perp.basis().row(r)));
      }
      if (!is_zero_vec(v) && !contains(l, v)) {
        candidate = v;
        found = true;
      }
    }
    if (!found) {
      for (std::size_t r = 0; r < perp.dim(); ++r)
        if (!contains(l, perp.basis().row(r))) {
          candidate = perp.basis().row(r);
          found = true;
          break;
        }
    }
    if (!found) break;  // l is already maximal isotropic
    l = sum(l, Subspace::from_vectors(total.dim, {candidate}));
  }
  return l;
}

Outcome criterion_special_families() {
  Outcome o;
  std::mt19937_64 rng(0xfa111e5ull);
  std::string err;
  const auto support_inside = [](const MultiplicityVector& n, int lo, int hi) {
    for (int t = 0; t < kTypeCount; ++t)
      if (n.n[t] != 0 && (t < lo || t > hi)) return false;
    return true;
  };

  // (a) zero-form inputs: support must stay in {I7..I11}.
  for (int i = 0; i < 220; ++i) {
    const std::size_t dx = rng() % 6, dy = rng() % 6;
    const BilinearSpace x = zero_form_space(dx), y = zero_form_space(dy);
    std::vector<Vec> vs;
    const std::size_t count = rng() % (dx + dy + 2);
    for (std::size_t k = 0; k < count; ++k) {
      Vec v;
      for (std::size_t j = 0; j < dx + dy; ++j)
        v.emplace_back(static_cast<long>(rng() % 5) - 2);
      vs.push_back(std::move(v));
    }
    const LinearRelation f(x, y, Subspace::from_vectors(dx + dy, vs));
    const DecompositionCertificate cert = decompose(f);
    if (!support_inside(cert.mult, 6, 10)) {
      o.fail("zero-form instance used a type outside I7..I11");
      break;
    }
    if (!verify_certificate(f, cert)) {
      o.fail("zero-form certificate failed verification");
      break;
    }
  }

  // (b) symplectic inputs: support must stay in {I1..I6}.
  for (int i = 0; i < 220 && o.ok; ++i) {
    const std::size_t kx = rng() % 4, ky = rng() % 4;
    const BilinearSpace x = standard_symplectic(kx), y = standard_symplectic(ky);
    const ProductSpace prod = product(x, y);
    const std::size_t want = rng() % (kx + ky + 1);
    const LinearRelation f(x, y, grow_isotropic(prod.total, want, rng));
    const DecompositionCertificate cert = decompose(f);
    if (!support_inside(cert.mult, 0, 5))
      o.fail("symplectic instance used a type outside I1..I6");
    else if (!verify_certificate(f, cert))
      o.fail("symplectic certificate failed verification");
  }

  // (c) lagrangian inputs between symplectic spaces: support must stay in {I1, I2, I3}.
  for (int i = 0; i < 220 && o.ok; ++i) {
    const std::size_t kx = rng() % 4, ky = rng() % 4;
    const BilinearSpace x = standard_symplectic(kx), y = standard_symplectic(ky);
    const ProductSpace prod = product(x, y);
    const LinearRelation f(x, y, grow_isotropic(prod.total, kx + ky, rng));
    if (f.graph.dim() != kx + ky) {
      o.fail("lagrangian growth fell short of half dimension");
      break;
    }
    const DecompositionCertificate cert = decompose(f);
    if (!support_inside(cert.mult, 0, 2))
      o.fail("lagrangian instance used a type outside I1..I3");
    else if (!verify_certificate(f, cert))
      o.fail("lagrangian certificate failed verification");
  }
  return o;
}

// --- criterion 6: duality against the canonical coisotropic models; involution
// and dimension complement on random cases.
Outcome criterion_duality() {
  Outcome o;
  for (int t = 0; t < kTypeCount; ++t) {
    const Tag tag = tag_from_index(t);
    const LinearRelation dual =
        annihilator(canonical_indecomposable(tag, Flavor::presymplectic));
    const LinearRelation model = canonical_indecomposable(tag, Flavor::poisson);
    if (!(dual == model)) {
      o.fail(std::string("annihilator of ") + type_descriptor(tag).label +
             " is not graph-equal to the coisotropic model");
      continue;
    }
    MultiplicityVector expect{};
    expect.n[t] = 1;
    if (!(decompose(dual).mult.n == expect.n))
      o.fail(std::string("annihilator of ") + type_descriptor(tag).label +
             " has wrong multiplicities");
  }

  std::mt19937_64 rng(0xd0a117ull);
  for (int i = 0; i < 500; ++i) {
    MultiplicityVector n{};
    const int picks = 1 + static_cast<int>(rng() % 3);
    for (int p = 0; p < picks; ++p) n.n[rng() % 13] += 1 + static_cast<long>(rng() % 2);
    const Flavor flavor = (i % 2 == 0) ? Flavor::presymplectic : Flavor::poisson;
    const LinearRelation f = random_instance(n, flavor, rng()).relation;
    const LinearRelation dual = annihilator(f);
    if (dual.graph.dim() != f.target.dim + f.source.dim - f.graph.dim()) {
      o.fail("annihilator does not complement the dimension");
      break;
    }
    if (!(annihilator(dual) == f)) {
      o.fail("annihilator is not an involution");
      break;
    }
  }
  return o;
}

// --- criterion 7: invariance under conjugation, additivity, modular law.
Outcome criterion_invariance() {
  Outcome o;
  std::mt19937_64 rng(0xadd171ull);
  const auto random_invertible = [&](std::size_t dim) {
    while (true) {
      Matrix m(dim, dim);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          m.at(i, j) = Scalar(static_cast<long>(rng() % 7) - 3);
      if (m.det() != 0) return m;
    }
  };
  const auto random_mult = [&] {
    MultiplicityVector n{};
    const int picks = 1 + static_cast<int>(rng() % 3);
    for (int p = 0; p < picks; ++p) n.n[rng() % 13] += 1 + static_cast<long>(rng() % 2);
    return n;
  };

  for (int i = 0; i < 500 && o.ok; ++i) {
    const LinearRelation f = canonical_sum(random_mult(), Flavor::presymplectic);
    const Matrix p = random_invertible(f.target.dim);
    const Matrix q = random_invertible(f.source.dim);
    if (!(compute_invariants(apply_iso_pair(f, p, q)) == compute_invariants(f)))
      o.fail("invariants changed under an isomorphism pair");
  }

  for (int i = 0; i < 500 && o.ok; ++i) {
    const LinearRelation a = random_instance(random_mult(), Flavor::presymplectic, rng()).relation;
    const LinearRelation b = random_instance(random_mult(), Flavor::presymplectic, rng()).relation;
    const InvariantVector expect = compute_invariants(a) + compute_invariants(b);
    if (!(compute_invariants(direct_sum(a, b)) == expect))
      o.fail("invariants are not additive over a direct sum");
  }

  const auto random_subspace = [&](std::size_t ambient) {
    std::vector<Vec> vs;
    const std::size_t count = rng() % (ambient + 1);
    for (std::size_t k = 0; k < count; ++k) {
      Vec v;
      for (std::size_t j = 0; j < ambient; ++j)
        v.emplace_back(static_cast<long>(rng() % 5) - 2);
      vs.push_back(std::move(v));
    }
    return Subspace::from_vectors(ambient, vs);
  };
  for (int i = 0; i < 500 && o.ok; ++i) {
    const std::size_t ambient = 3 + rng() % 5;
    const Subspace g = random_subspace(ambient);
    const Subspace f = random_subspace(ambient);
    const Subspace e = intersect(g, random_subspace(ambient));  // e <= g
    if (!(intersect(g, sum(f, e)) == sum(intersect(g, f), e)))
      o.fail("modular law violated");
  }
  return o;
}

// --- criterion 8: aggregated trace audit from criteria 3 and 4.
Outcome criterion_traces() {
  Outcome o;
  if (g_traces.runs < 3627)
    o.fail("expected 3627 audited runs, saw " + std::to_string(g_traces.runs));
  if (g_traces.violated_runs > 0)
    o.fail(std::to_string(g_traces.violated_runs) +
           " runs had trace violations; first: " + g_traces.first_example);
  if (o.ok)
    o.detail = std::to_string(g_traces.runs) + " decompositions audited, 0 violations";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  long c3_cases = 0, c4_cases = 0;

  const auto gate = [&](int index, const std::string& name, auto&& body,
                        long time_budget_ms = 0) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const long ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    if (o.ok && time_budget_ms > 0 && ms > time_budget_ms) {
      o.ok = false;
      o.detail = "exceeded time budget of " + std::to_string(time_budget_ms) + " ms";
    }
    std::printf("%s  criterion %d: %s [%ld ms]%s%s\n", o.ok ? "PASS" : "FAIL", index,
                name.c_str(), ms, o.detail.empty() ? "" : " — ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
  };

  gate(1, "embedded matrix equals the golden copy and is unimodular",
       criterion_matrix_fidelity);
  gate(2, "canonical invariant vectors biject onto the matrix columns",
       criterion_column_bijection);
  gate(3, "exhaustive small multiplicity round-trip (2627 cases)",
       [&] { return criterion_exhaustive_small(c3_cases); }, 120000);
  gate(4, "seeded random conjugation round-trip (1000 cases, dims <= 12)",
       [&] { return criterion_random_roundtrip(c4_cases); }, 300000);
  gate(5, "zero-form, symplectic, and lagrangian families stay in their type ranges",
       criterion_special_families);
  gate(6, "annihilator matches the coisotropic models, involutive, dimension-complementing",
       criterion_duality);
  gate(7, "invariance under conjugation, additivity, and the modular law",
       criterion_invariance);
  gate(8, "proof-trace equations hold on every audited decomposition",
       criterion_traces);

  return failures;
}
