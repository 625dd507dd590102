#include "extwb/cohom.hpp"

#include <deque>
#include <sstream>

namespace extwb::cohom {

using linalg::SparseVec;
using tower::Elem;

Mat Mat::zero(const FieldPtr& f, std::size_t r, std::size_t c) {
  Mat m;
  m.rows = r;
  m.cols = c;
  m.a.assign(r * c, f->zero());
  return m;
}

Mat Mat::identity(const FieldPtr& f, std::size_t n) {
  Mat m = zero(f, n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = f->one();
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch");
  Mat r;
  r.rows = rows;
  r.cols = o.cols;
  r.a.resize(rows * o.cols);
  const Scalar zero = rows && cols ? a[0] - a[0] : Scalar();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < o.cols; ++j) {
      Scalar s = zero;
      for (std::size_t k = 0; k < cols; ++k) {
        const Scalar& x = (*this)(i, k);
        if (x.is_zero()) continue;
        const Scalar& y = o(k, j);
        if (!y.is_zero()) s += x * y;
      }
      r(i, j) = s;
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix shape mismatch");
  Mat r = *this;
  for (std::size_t k = 0; k < a.size(); ++k) r.a[k] += o.a[k];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix shape mismatch");
  Mat r = *this;
  for (std::size_t k = 0; k < a.size(); ++k) r.a[k] -= o.a[k];
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& x : r.a) x = -x;
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------

FiniteGroup::FiniteGroup(const Group& G, unsigned level) : G_(&G), level_(level) {
  elems_ = G.enumerate(grp::Subgroup::G, level);
  gens_ = G.generators(level);
  for (std::size_t k = 0; k < elems_.size(); ++k) index_.emplace(elems_[k].key(), k);
  id_ = index(G.identity(level));
  const std::size_t n = elems_.size();
  table_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table_[x * n + y] = index(G.mul(elems_[x], elems_[y]));

  std::vector<std::size_t> gidx;
  for (const auto& g : gens_) gidx.push_back(index(g));
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{id_};
  seen[id_] = true;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gidx.size(); ++k) {
      const std::size_t y = mul(x, gidx[k]);
      const bool fresh = !seen[y];
      edges_.push_back({x, k, y, fresh});
      if (fresh) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  for (bool b : seen)
    if (!b) throw std::logic_error("generators do not reach every element");
}

std::size_t FiniteGroup::index(const GroupElem& g) const {
  auto it = index_.find(g.key());
  if (it == index_.end()) throw std::invalid_argument("element not in the group");
  return it->second;
}

// ---------------------------------------------------------------------------

FiniteRep::FiniteRep(std::shared_ptr<const FiniteGroup> grp, FieldPtr field, std::vector<Mat> gen_mats,
                     std::string name)
    : grp_(std::move(grp)), field_(std::move(field)), gen_mats_(std::move(gen_mats)), name_(std::move(name)) {
  if (gen_mats_.size() != grp_->generators().size()) throw std::invalid_argument("one matrix per generator");
  dim_ = gen_mats_.empty() ? 0 : gen_mats_[0].rows;
  for (const auto& m : gen_mats_)
    if (m.rows != dim_ || m.cols != dim_) throw std::invalid_argument("generator matrices must be square");
  std::vector<std::optional<Mat>> mats(grp_->size());
  mats[grp_->identity()] = Mat::identity(field_, dim_);
  for (const auto& e : grp_->edges()) {
    Mat m = *mats[e.from] * gen_mats_[e.gen];
    if (e.tree) {
      mats[e.to] = std::move(m);
    } else {
      ++cross_edges_;
      if (!(*mats[e.to] == m)) throw std::invalid_argument("relations do not hold for " + name_);
    }
  }
  mats_.reserve(mats.size());
  for (auto& m : mats) mats_.push_back(std::move(*m));
}

FiniteRep trivial_rep(std::shared_ptr<const FiniteGroup> grp, FieldPtr field) {
  std::vector<Mat> gm(grp->generators().size(), Mat::identity(field, 1));
  return FiniteRep(std::move(grp), std::move(field), std::move(gm), "tr");
}

FiniteRep induced_rep(std::shared_ptr<const FiniteGroup> grp, const charmod::TorusChar& theta) {
  const indmod::InducedModule M(grp->group(), theta, grp->level());
  const FieldPtr& f = theta.field();
  std::vector<Mat> gm;
  for (const auto& g : grp->generators()) {
    Mat m = Mat::zero(f, M.dim(), M.dim());
    for (std::size_t j = 0; j < M.dim(); ++j) {
      const auto t = M.act(g, M.labels()[j]);
      m(M.position(t.label), j) = t.coeff;
    }
    gm.push_back(std::move(m));
  }
  return FiniteRep(std::move(grp), f, std::move(gm), "M(" + std::to_string(theta.exponent()) + ")");
}

FiniteRep steinberg_rep(std::shared_ptr<const FiniteGroup> grp, const charmod::TorusChar& any_char) {
  const charmod::TorusChar tr = any_char.with_exponent(0);
  const indmod::InducedModule M(grp->group(), tr, grp->level());
  const FieldPtr& f = tr.field();
  const auto basis = M.steinberg_basis();
  const auto& xs = M.tower().enumerate_level(grp->level());
  std::vector<Mat> gm;
  for (const auto& g : grp->generators()) {
    Mat m = Mat::zero(f, basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto w = M.act(g, basis[j]);
      // ε(y)η = Cell0 - Cell1(y), so the coordinate at y is minus the Cell1(y) coefficient.
      SparseVec back;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        const Scalar c = -linalg::coeff_at(w, indmod::cell1(xs[k]), f);
        m(k, j) = c;
        if (!c.is_zero()) back = linalg::axpy(back, c, basis[k]);
      }
      if (back != w) throw std::logic_error("Steinberg basis does not span the image");
    }
    gm.push_back(std::move(m));
  }
  return FiniteRep(std::move(grp), f, std::move(gm), "St");
}

// ---------------------------------------------------------------------------

namespace {

// Linear form in the unknowns, kept as a dense index -> scalar map.
using Form = std::map<std::uint32_t, Scalar>;

void add_to(Form& dst, const Form& src, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [k, v] : src) {
    auto it = dst.find(k);
    if (it == dst.end()) {
      dst.emplace(k, v * c);
    } else {
      it->second += v * c;
      if (it->second.is_zero()) dst.erase(it);
    }
  }
}

SparseVec to_sparse(Form f) { return linalg::from_map(std::move(f)); }

std::vector<Mat> split_vector(const FieldPtr& f, const SparseVec& v, std::size_t nblocks, std::size_t r,
                              std::size_t c) {
  std::vector<Mat> out(nblocks, Mat::zero(f, r, c));
  for (const auto& [k, s] : v) out[k / (r * c)].a[k % (r * c)] = s;
  return out;
}

SparseVec join_mats(const std::vector<Mat>& ms) {
  SparseVec v;
  std::uint32_t off = 0;
  for (const auto& m : ms) {
    for (std::size_t k = 0; k < m.a.size(); ++k)
      if (!m.a[k].is_zero()) v.emplace_back(off + k, m.a[k]);
    off += static_cast<std::uint32_t>(m.a.size());
  }
  return v;
}

void check_compatible(const FiniteRep& M, const FiniteRep& N) {
  if (M.group_ptr() != N.group_ptr()) throw std::invalid_argument("representations of different groups");
  if (M.field()->mode() != N.field()->mode()) throw coeff::ModeMismatch("representations over different fields");
}

}  // namespace

std::vector<Mat> hom_space(const FiniteRep& M, const FiniteRep& N) {
  check_compatible(M, N);
  const std::size_t dm = M.dim(), dn = N.dim();
  const FieldPtr& f = M.field();
  std::vector<SparseVec> rows;
  // (ρ_N X - X ρ_M)_{rc} = Σ_j ρ_N[r][j] X[j][c] - Σ_j X[r][j] ρ_M[j][c].
  for (std::size_t k = 0; k < M.group().generators().size(); ++k) {
    const Mat& A = N.gen(k);
    const Mat& B = M.gen(k);
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) {
        Form row;
        for (std::size_t j = 0; j < dn; ++j) add_to(row, {{static_cast<std::uint32_t>(j * dm + c), f->one()}}, A(r, j));
        for (std::size_t j = 0; j < dm; ++j) add_to(row, {{static_cast<std::uint32_t>(r * dm + j), f->one()}}, -B(j, c));
        if (!row.empty()) rows.push_back(to_sparse(std::move(row)));
      }
  }
  std::vector<Mat> out;
  for (const auto& v : linalg::kernel(f, rows, static_cast<std::uint32_t>(dn * dm)))
    out.push_back(split_vector(f, v, 1, dn, dm)[0]);
  return out;
}

std::vector<Mat> coboundary(const FiniteRep& M, const FiniteRep& N, const Mat& phi) {
  std::vector<Mat> out;
  for (std::size_t k = 0; k < M.group().generators().size(); ++k) out.push_back(N.gen(k) * phi - phi * M.gen(k));
  return out;
}

namespace {

std::size_t coboundary_rank(const FiniteRep& M, const FiniteRep& N, bool all_elements) {
  const FieldPtr& f = M.field();
  const std::size_t dm = M.dim(), dn = N.dim();
  linalg::Echelon ech(f);
  for (std::size_t r = 0; r < dn; ++r)
    for (std::size_t c = 0; c < dm; ++c) {
      Mat E = Mat::zero(f, dn, dm);
      E(r, c) = f->one();
      std::vector<Mat> vals;
      if (all_elements) {
        for (std::size_t g = 0; g < M.group().size(); ++g) vals.push_back(N.of(g) * E - E * M.of(g));
      } else {
        vals = coboundary(M, N, E);
      }
      ech.insert(join_mats(vals));
    }
  return ech.rank();
}

}  // namespace

Ext1Result ext1_reduced(const FiniteRep& M, const FiniteRep& N) {
  check_compatible(M, N);
  const FieldPtr& f = M.field();
  const FiniteGroup& grp = M.group();
  const std::size_t dm = M.dim(), dn = N.dim(), blk = dm * dn;
  const std::size_t ngen = grp.generators().size();
  const auto nunk = static_cast<std::uint32_t>(ngen * blk);

  // C(g) as a dn x dm matrix of linear forms in the generator values.
  using FormMat = std::vector<Form>;
  auto gen_form = [&](std::size_t k) {
    FormMat fm(blk);
    for (std::size_t e = 0; e < blk; ++e) fm[e] = {{static_cast<std::uint32_t>(k * blk + e), f->one()}};
    return fm;
  };
  auto next = [&](std::size_t g, const FormMat& Cg, std::size_t k) {
    // C(g·s_k) = ρ_N(g) C(s_k) + C(g) ρ_M(s_k).
    const FormMat Ck = gen_form(k);
    const Mat& A = N.of(g);
    const Mat& B = M.gen(k);
    FormMat out(blk);
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) {
        Form& dst = out[r * dm + c];
        for (std::size_t j = 0; j < dn; ++j) add_to(dst, Ck[j * dm + c], A(r, j));
        for (std::size_t j = 0; j < dm; ++j) add_to(dst, Cg[r * dm + j], B(j, c));
      }
    return out;
  };

  std::vector<std::optional<FormMat>> C(grp.size());
  C[grp.identity()] = FormMat(blk);
  std::vector<SparseVec> rows;
  Ext1Result res;
  res.unknowns = nunk;
  for (const auto& e : grp.edges()) {
    FormMat val = next(e.from, *C[e.from], e.gen);
    if (e.tree) {
      C[e.to] = std::move(val);
      continue;
    }
    for (std::size_t x = 0; x < blk; ++x) {
      Form row = (*C[e.to])[x];
      add_to(row, val[x], -f->one());
      ++res.equations;
      if (!row.empty()) rows.push_back(to_sparse(std::move(row)));
    }
  }
  const auto z = linalg::kernel(f, rows, nunk);
  res.dim_z1 = z.size();

  linalg::Echelon ech(f);
  for (std::size_t r = 0; r < dn; ++r)
    for (std::size_t c = 0; c < dm; ++c) {
      Mat E = Mat::zero(f, dn, dm);
      E(r, c) = f->one();
      ech.insert(join_mats(coboundary(M, N, E)));
    }
  res.dim_b1 = ech.rank();
  for (const auto& v : z)
    if (ech.insert(v)) res.transversal.push_back(split_vector(f, v, ngen, dn, dm));
  if (res.transversal.size() != res.ext1()) throw std::logic_error("coboundaries are not cocycles");
  return res;
}

Ext1Result ext1_unreduced(const FiniteRep& M, const FiniteRep& N) {
  check_compatible(M, N);
  const FieldPtr& f = M.field();
  const FiniteGroup& grp = M.group();
  const std::size_t dm = M.dim(), dn = N.dim(), blk = dm * dn, n = grp.size();
  const auto nunk = static_cast<std::uint32_t>(n * blk);
  auto var = [&](std::size_t g, std::size_t r, std::size_t c) {
    return static_cast<std::uint32_t>(g * blk + r * dm + c);
  };
  Ext1Result res;
  res.unknowns = nunk;
  linalg::Echelon rows(f);
  // C(gh) - ρ_N(g) C(h) - C(g) ρ_M(h) = 0 for every pair.
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t gh = grp.mul(g, h);
      const Mat& A = N.of(g);
      const Mat& B = M.of(h);
      for (std::size_t r = 0; r < dn; ++r)
        for (std::size_t c = 0; c < dm; ++c) {
          Form row{{var(gh, r, c), f->one()}};
          for (std::size_t j = 0; j < dn; ++j) add_to(row, {{var(h, j, c), f->one()}}, -A(r, j));
          for (std::size_t j = 0; j < dm; ++j) add_to(row, {{var(g, r, j), f->one()}}, -B(j, c));
          ++res.equations;
          if (!row.empty()) rows.insert(to_sparse(std::move(row)));
        }
    }
  res.dim_z1 = nunk - rows.rank();
  res.dim_b1 = coboundary_rank(M, N, true);
  return res;
}

std::optional<std::vector<Mat>> propagate_cocycle(const FiniteRep& M, const FiniteRep& N,
                                                  const std::vector<Mat>& on_gens) {
  check_compatible(M, N);
  const FiniteGroup& grp = M.group();
  if (on_gens.size() != grp.generators().size()) throw std::invalid_argument("one value per generator");
  for (const auto& m : on_gens)
    if (m.rows != N.dim() || m.cols != M.dim()) throw std::invalid_argument("cocycle value has the wrong shape");
  std::vector<std::optional<Mat>> C(grp.size());
  C[grp.identity()] = Mat::zero(M.field(), N.dim(), M.dim());
  for (const auto& e : grp.edges()) {
    Mat val = N.of(e.from) * on_gens[e.gen] + *C[e.from] * M.gen(e.gen);
    if (e.tree) {
      C[e.to] = std::move(val);
    } else if (!(*C[e.to] == val)) {
      return std::nullopt;
    }
  }
  std::vector<Mat> out;
  for (auto& m : C) out.push_back(std::move(*m));
  return out;
}

Splitting find_splitting(const FiniteRep& M, const FiniteRep& N, const std::vector<Mat>& cocycle_on_gens) {
  if (!propagate_cocycle(M, N, cocycle_on_gens)) throw std::invalid_argument("not a cocycle");
  const FieldPtr& f = M.field();
  const std::size_t dm = M.dim(), dn = N.dim();
  std::vector<SparseVec> rows;
  std::vector<Scalar> rhs;
  for (std::size_t k = 0; k < cocycle_on_gens.size(); ++k) {
    const Mat& A = N.gen(k);
    const Mat& B = M.gen(k);
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) {
        Form row;
        for (std::size_t j = 0; j < dn; ++j) add_to(row, {{static_cast<std::uint32_t>(j * dm + c), f->one()}}, A(r, j));
        for (std::size_t j = 0; j < dm; ++j) add_to(row, {{static_cast<std::uint32_t>(r * dm + j), f->one()}}, -B(j, c));
        rows.push_back(to_sparse(std::move(row)));
        rhs.push_back(cocycle_on_gens[k](r, c));
      }
  }
  Splitting out;
  const auto sol = linalg::solve(f, rows, rhs, static_cast<std::uint32_t>(dn * dm));
  if (!sol) return out;
  out.split = true;
  out.phi = split_vector(f, *sol, 1, dn, dm)[0];
  // g·(-φm, m) = (-ρ_N φ m + C m, ρ_M m) must equal (-φ ρ_M m, ρ_M m).
  out.complement_certified = true;
  for (std::size_t k = 0; k < cocycle_on_gens.size(); ++k) {
    const Mat top = -(N.gen(k) * out.phi) + cocycle_on_gens[k];
    if (!(top == -(out.phi * M.gen(k)))) out.complement_certified = false;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(Normalization::Status s) {
  switch (s) {
    case Normalization::Status::AlreadyNormal: return "already-normal";
    case Normalization::Status::Corrected: return "corrected";
    case Normalization::Status::Obstruction: return "obstruction";
  }
  return "?";
}

namespace {

void check_char(const charmod::TorusChar& theta) {
  const std::uint64_t ch = theta.field()->mode().characteristic();
  if (ch == 2 || ch == theta.tower().p())
    throw std::invalid_argument("coefficient characteristic must avoid 2 and p");
}

}  // namespace

Normalization normalize_extension(const charmod::TorusChar& theta, unsigned level, const std::vector<Scalar>& phi) {
  check_char(theta);
  const auto& tw = theta.tower();
  const auto units = tw.units(level);
  if (phi.size() != units.size()) throw std::invalid_argument("one value per torus element");
  std::map<Elem, std::size_t> at;
  for (std::size_t k = 0; k < units.size(); ++k) at.emplace(units[k], k);

  // φ(xy) = θ(y)φ(x) + φ(y).
  for (std::size_t x = 0; x < units.size(); ++x)
    for (std::size_t y = 0; y < units.size(); ++y) {
      const Scalar lhs = phi[at.at(tw.mul(units[x], units[y]))];
      if (lhs != theta.eval(units[y]) * phi[x] + phi[y]) {
        std::ostringstream os;
        os << "not a cochain at (" << tw.to_string(units[x]) << ", " << tw.to_string(units[y]) << ")";
        throw NotACochain(os.str());
      }
    }

  Normalization out;
  bool all_zero = true;
  for (const auto& v : phi) all_zero = all_zero && v.is_zero();
  if (all_zero) return out;

  const FieldPtr& f = theta.field();
  for (Elem x : units) {
    const Scalar d = theta.eval(x) - f->one();
    if (d.is_zero()) continue;
    const Scalar a = phi[at.at(x)] / d;
    for (std::size_t y = 0; y < units.size(); ++y)
      if (phi[y] != a * (theta.eval(units[y]) - f->one())) {
        out.status = Normalization::Status::Obstruction;
        out.note = "cochain is not a coboundary";
        return out;
      }
    out.status = Normalization::Status::Corrected;
    out.a = a;
    return out;
  }
  // θ trivial on T_i: φ is a homomorphism to the additive group, forced to
  // vanish unless the characteristic divides |T_i|.
  out.status = Normalization::Status::Obstruction;
  out.note = "theta trivial on the torus and phi nonzero; characteristic divides |T_i|";
  return out;
}

std::vector<Scalar> apply_correction(const charmod::TorusChar& theta, unsigned level, const std::vector<Scalar>& phi,
                                     const Scalar& a) {
  const auto units = theta.tower().units(level);
  if (phi.size() != units.size()) throw std::invalid_argument("one value per torus element");
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < units.size(); ++k)
    out.push_back(phi[k] - a * (theta.eval(units[k]) - theta.field()->one()));
  return out;
}

CoxeterCheck coxeter_check(unsigned m, std::uint64_t ch) {
  if (m < 2) throw std::invalid_argument("Coxeter order must be at least 2");
  const FieldPtr f =
      coeff::Field::make(ch == 0 ? coeff::CoeffMode::rationals() : coeff::CoeffMode::prime_field(ch));
  CoxeterCheck out;
  out.m = m;
  out.characteristic = ch;
  out.forces_zero = !f->from_int(m).is_zero();
  // Both reflections act by -1; φ(wx) = θ(x)φ(w) + φ(x) along r s r s ...
  const Scalar phi_r = f->from_int(2), phi_s = f->from_int(5);
  Scalar acc = f->zero();
  for (unsigned k = 0; k < 2 * m; ++k) acc = -acc + (k % 2 == 0 ? phi_r : phi_s);
  out.recurrence_holds = acc == f->from_int(m) * (phi_s - phi_r);
  return out;
}

std::size_t hom_dim_double_coset(const FiniteGroup& grp, const charmod::TorusChar& lambda,
                                 const charmod::TorusChar& mu) {
  const Group& G = grp.group();
  const auto& el = grp.elements();
  std::vector<std::size_t> borel;
  for (std::size_t k = 0; k < el.size(); ++k)
    if (el[k].c == 0) borel.push_back(k);
  std::vector<bool> done(el.size(), false);
  std::size_t dim = 0;
  for (std::size_t w = 0; w < el.size(); ++w) {
    if (done[w]) continue;
    for (std::size_t b1 : borel)
      for (std::size_t b2 : borel) done[grp.mul(grp.mul(b1, w), b2)] = true;
    // Hom_{B ∩ wBw^{-1}}(λ, μ^w) with μ^w(x) = μ(w^{-1} x w).
    const GroupElem winv = G.inv(el[w]);
    bool ok = true;
    for (std::size_t b : borel) {
      const GroupElem c = G.mul(G.mul(winv, el[b]), el[w]);
      if (c.c != 0) continue;
      if (lambda.eval(el[b].a) != mu.eval(c.a)) {
        ok = false;
        break;
      }
    }
    if (ok) ++dim;
  }
  return dim;
}

}  // namespace extwb::cohom
