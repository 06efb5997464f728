#include "lsym/cochain.hpp"

#include <stdexcept>
#include <utility>

namespace lsym {

namespace {

Vec unit(std::size_t n, std::size_t k) {
  Vec v(n);
  v[k] = Scalar(1);
  return v;
}

/// [e_i, e_j] = e_i e_j - ε(α_i, α_j) e_j e_i in the associated ε-Lie algebra.
Vec lie_bracket(const GradedAlgebra& a, std::size_t i, std::size_t j) {
  Vec b = a.product(i, j);
  axpy(b, -a.eps(i, j), a.product(j, i));
  return b;
}

void enumerate_monomials(const WedgeRules& r, std::size_t length, std::size_t start,
                         std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == length) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = start; k < r.n; ++k) {
    if (!cur.empty() && cur.back() == k && !r.odd(k)) continue;
    cur.push_back(k);
    enumerate_monomials(r, length, k, cur, out);
    cur.pop_back();
  }
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

WedgeRules wedge_rules(const GradedAlgebra& a) {
  WedgeRules r;
  r.n = a.dim();
  r.eps.resize(r.n * r.n);
  for (std::size_t i = 0; i < r.n; ++i)
    for (std::size_t j = 0; j < r.n; ++j) r.eps[i * r.n + j] = a.eps(i, j);
  return r;
}

WedgeRules wedge_rules(const EpsilonLieAlgebra& g) {
  WedgeRules r;
  r.n = g.dim();
  r.eps.resize(r.n * r.n);
  for (std::size_t i = 0; i < r.n; ++i)
    for (std::size_t j = 0; j < r.n; ++j) r.eps[i * r.n + j] = g.eps(i, j);
  return r;
}

std::optional<WedgeMonomial> normalize_wedge(const WedgeRules& r, std::vector<std::size_t> factors) {
  WedgeMonomial m;
  for (std::size_t p = 1; p < factors.size(); ++p)
    for (std::size_t q = p; q > 0 && factors[q - 1] > factors[q]; --q) {
      m.sign *= -r(factors[q - 1], factors[q]);
      std::swap(factors[q - 1], factors[q]);
    }
  for (std::size_t p = 1; p < factors.size(); ++p)
    if (factors[p - 1] == factors[p] && !r.odd(factors[p])) return std::nullopt;
  m.indices = std::move(factors);
  return m;
}

std::optional<WedgeMonomial> normalize_wedge(const GradedAlgebra& a, std::vector<std::size_t> factors) {
  return normalize_wedge(wedge_rules(a), std::move(factors));
}

std::vector<std::vector<std::size_t>> canonical_monomials(const WedgeRules& r, std::size_t length) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  enumerate_monomials(r, length, 0, cur, out);
  return out;
}

CochainSpace::CochainSpace(const WedgeRules& rules, const GradingGroup& group, std::vector<Degree> slot_degrees,
                           std::vector<Degree> value_degrees, std::size_t monomial_length, bool has_last)
    : slot_degrees_(std::move(slot_degrees)),
      value_degrees_(std::move(value_degrees)),
      mono_len_(monomial_length),
      has_last_(has_last),
      monomials_(canonical_monomials(rules, monomial_length)) {
  for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(monomials_[k], k);
  degrees_.reserve(size());
  for (const auto& mono : monomials_) {
    Degree md = group.zero();
    for (std::size_t x : mono) md = group.add(md, slot_degrees_[x]);
    for (std::size_t last = 0; last < last_count(); ++last) {
      Degree sd = has_last_ ? group.add(md, slot_degrees_[last]) : md;
      for (const auto& vd : value_degrees_) degrees_.push_back(group.sub(vd, sd));
    }
  }
}

std::optional<std::size_t> CochainSpace::monomial_index(const std::vector<std::size_t>& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CochainSpace::Key CochainSpace::key(std::size_t pos) const {
  Key k;
  k.value = pos % dim_value();
  pos /= dim_value();
  k.last = pos % last_count();
  k.monomial = pos / last_count();
  return k;
}

Vec CochainSpace::evaluate(const WedgeRules& rules, const Vec& f, const std::vector<std::size_t>& args) const {
  if (args.size() != arity()) throw std::invalid_argument("cochain evaluated at a word of the wrong length");
  Vec out(dim_value());
  std::vector<std::size_t> prefix(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(mono_len_));
  auto nm = normalize_wedge(rules, std::move(prefix));
  if (!nm) return out;
  const std::size_t mono = index_.at(nm->indices);
  const std::size_t last = has_last_ ? args.back() : 0;
  const std::size_t base = position(mono, last, 0);
  for (std::size_t l = 0; l < dim_value(); ++l)
    if (!f[base + l].is_zero()) out[l] = nm->sign * f[base + l];
  return out;
}

std::map<Degree, Vec> homogeneous_components(const std::vector<Degree>& degrees, const Vec& f) {
  std::map<Degree, Vec> out;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k].is_zero()) continue;
    auto [it, fresh] = out.try_emplace(degrees[k], Vec(f.size()));
    it->second[k] = f[k];
  }
  return out;
}

Vec face_value(const Bimodule& m, std::size_t t, const Degree& beta, const std::vector<std::size_t>& args,
               const WordEvaluator& f) {
  const GradedAlgebra& a = m.algebra();
  const GradingGroup& g = a.group();
  const std::size_t i = args.size() - 1;
  Vec out(m.dim());
  if (t == 0 || t > i) return out;
  const std::size_t xt = args[t - 1];
  const Degree& at = a.degree(xt);
  std::vector<std::size_t> w;
  w.reserve(i);
  for (std::size_t k = 0; k <= i; ++k)
    if (k != t - 1) w.push_back(args[k]);

  // ε(β + α_1 + ... + α_{t-1}, α_t) x_t · f(..., x̂_t, ...)
  Degree pre = beta;
  for (std::size_t k = 0; k + 1 < t; ++k) pre = g.add(pre, a.degree(args[k]));
  axpy(out, a.eps(pre, at), m.act_left(xt, f(w)));

  // ∓ε(α_t, α_{t+1} + ... + α_i) on the two last-slot terms
  Degree mid = g.zero();
  for (std::size_t k = t; k < i; ++k) mid = g.add(mid, a.degree(args[k]));
  const Scalar e = a.eps(at, mid);
  const std::size_t xl = args[i];
  const Vec& prod = a.product(xt, xl);
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (prod[k].is_zero()) continue;
    w.back() = k;
    axpy(out, -(e * prod[k]), f(w));
  }
  w.back() = xt;
  axpy(out, e, m.act_right(f(w), xl));
  w.back() = xl;

  // -Σ_{t<j<=i} ε(α_t, α_{t+1} + ... + α_{j-1}) f(..., x̂_t, ..., [x_t, x_j], ...)
  Degree acc = g.zero();
  for (std::size_t j = t + 1; j <= i; ++j) {
    const std::size_t xj = args[j - 1];
    const Scalar c = a.eps(at, acc);
    const Vec br = lie_bracket(a, xt, xj);
    for (std::size_t k = 0; k < br.size(); ++k) {
      if (br[k].is_zero()) continue;
      w[j - 2] = k;
      axpy(out, -(c * br[k]), f(w));
    }
    w[j - 2] = xj;
    acc = g.add(acc, a.degree(xj));
  }
  return out;
}

CochainComplex::CochainComplex(Bimodule m) : module_(std::move(m)), rules_(wedge_rules(module_.algebra())) {
  const GradedAlgebra& a = module_.algebra();
  const std::size_t n = a.dim(), d = module_.dim();
  // (e_i e_j) m - e_i (e_j m) = 0, solved one degree block at a time.
  ExactMatrix sys(n * n * d, d);
  for (std::size_t l = 0; l < d; ++l) {
    const Vec ml = unit(d, l);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec r = module_.act_left(a.product(i, j), ml);
        axpy(r, Scalar(-1), module_.act_left(i, module_.left(j, l)));
        for (std::size_t k = 0; k < d; ++k) sys((i * n + j) * d + k, l) = r[k];
      }
  }
  std::map<Degree, std::vector<std::size_t>> blocks;
  for (std::size_t l = 0; l < d; ++l) blocks[module_.degree(l)].push_back(l);
  for (const auto& [deg, cols] : blocks) {
    auto rn = rank_nullspace(sys.select_columns(cols));
    for (const auto& v : rn.nullspace) {
      Vec full(d);
      for (std::size_t k = 0; k < cols.size(); ++k) full[cols[k]] = v[k];
      c0_basis_.push_back(std::move(full));
      c0_degrees_.push_back(deg);
    }
  }
}

const CochainSpace& CochainComplex::space(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("C^0 has no tensor-slot basis; use c0_basis()");
  std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = spaces_[n];
  if (!slot) {
    const GradedAlgebra& a = algebra();
    std::vector<Degree> vd;
    for (std::size_t l = 0; l < module_.dim(); ++l) vd.push_back(module_.degree(l));
    slot = std::make_unique<CochainSpace>(rules_, a.group(), a.degrees(), std::move(vd), n - 1, true);
  }
  return *slot;
}

std::vector<Degree> CochainComplex::degrees(std::size_t n) const {
  return n == 0 ? c0_degrees_ : space(n).degrees();
}

Vec CochainComplex::evaluate(std::size_t n, const Vec& f, const std::vector<std::size_t>& args) const {
  return space(n).evaluate(rules_, f, args);
}

Vec CochainComplex::coboundary(std::size_t n, const Vec& f) const {
  const GradedAlgebra& a = algebra();
  if (n == 0) {
    // d(m)(x) = ε(β, α) x·m - m·x
    const CochainSpace& out_space = space(1);
    Vec out(out_space.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (f[k].is_zero()) continue;
      const Vec& m = c0_basis_[k];
      for (std::size_t x = 0; x < a.dim(); ++x) {
        Vec v = module_.act_left(x, m);
        for (auto& s : v) s *= a.eps(c0_degrees_[k], a.degree(x));
        axpy(v, Scalar(-1), module_.act_right(m, x));
        for (std::size_t l = 0; l < module_.dim(); ++l)
          if (!v[l].is_zero()) out[out_space.position(0, x, l)] += f[k] * v[l];
      }
    }
    return out;
  }
  Vec out(space(n + 1).size());
  for (const auto& [beta, comp] : homogeneous_components(space(n).degrees(), f)) {
    Vec part = coboundary_homogeneous(n, comp, beta);
    axpy(out, Scalar(1), part);
  }
  return out;
}

Vec CochainComplex::coboundary_homogeneous(std::size_t n, const Vec& f, const Degree& beta) const {
  const CochainSpace& in = space(n);
  const CochainSpace& out_space = space(n + 1);
  WordEvaluator eval = [&](const std::vector<std::size_t>& w) { return in.evaluate(rules_, f, w); };
  Vec out(out_space.size());
  std::vector<std::size_t> args(n + 1);
  for (std::size_t mono = 0; mono < out_space.monomials().size(); ++mono) {
    const auto& mv = out_space.monomials()[mono];
    std::copy(mv.begin(), mv.end(), args.begin());
    for (std::size_t last = 0; last < algebra().dim(); ++last) {
      args[n] = last;
      // d = -Σ_t (-1)^t D_t
      Vec v(module_.dim());
      for (std::size_t t = 1; t <= n; ++t) {
        Vec ft = face_value(module_, t, beta, args, eval);
        axpy(v, t % 2 == 1 ? Scalar(1) : Scalar(-1), ft);
      }
      const std::size_t base = out_space.position(mono, last, 0);
      for (std::size_t l = 0; l < v.size(); ++l) out[base + l] = v[l];
    }
  }
  return out;
}

ExactMatrix CochainComplex::coboundary_matrix(std::size_t n, Exec exec) const {
  const std::size_t cols = dim(n), rows = space(n + 1).size();
  return assemble_columns(rows, cols, [&](std::size_t c) { return coboundary(n, unit(cols, c)); }, exec);
}

Vec CochainComplex::rho(std::size_t x, std::size_t n, const Vec& f) const {
  if (n == 0) throw std::invalid_argument("rho is defined on C^n for n >= 1");
  const GradedAlgebra& a = algebra();
  const GradingGroup& g = a.group();
  const CochainSpace& sp = space(n);
  const Degree& alpha = a.degree(x);
  const std::size_t i = n - 1;
  Vec out(sp.size());
  for (const auto& [beta, comp] : homogeneous_components(sp.degrees(), f)) {
    auto eval = [&](const std::vector<std::size_t>& w) { return sp.evaluate(rules_, comp, w); };
    std::vector<std::size_t> args(n);
    for (std::size_t mono = 0; mono < sp.monomials().size(); ++mono) {
      const auto& mv = sp.monomials()[mono];
      std::copy(mv.begin(), mv.end(), args.begin());
      for (std::size_t last = 0; last < a.dim(); ++last) {
        args[i] = last;
        // x·f(x_1..x_{i+1})
        Vec v = module_.act_left(x, eval(args));
        Degree acc = beta;
        for (std::size_t k = 0; k < i; ++k) acc = g.add(acc, a.degree(args[k]));
        const Scalar e = a.eps(alpha, acc);
        std::vector<std::size_t> w = args;
        const Vec& prod = a.product(x, last);
        for (std::size_t k = 0; k < prod.size(); ++k) {
          if (prod[k].is_zero()) continue;
          w[i] = k;
          axpy(v, -(e * prod[k]), eval(w));
        }
        w[i] = x;
        axpy(v, e, module_.act_right(eval(w), last));
        w[i] = last;
        Degree pre = beta;
        for (std::size_t s = 0; s < i; ++s) {
          const Scalar c = a.eps(alpha, pre);
          const Vec br = lie_bracket(a, x, args[s]);
          for (std::size_t k = 0; k < br.size(); ++k) {
            if (br[k].is_zero()) continue;
            w[s] = k;
            axpy(v, -(c * br[k]), eval(w));
          }
          w[s] = args[s];
          pre = g.add(pre, a.degree(args[s]));
        }
        const std::size_t base = sp.position(mono, last, 0);
        for (std::size_t l = 0; l < v.size(); ++l) out[base + l] += v[l];
      }
    }
  }
  return out;
}

ExactMatrix CochainComplex::rho_matrix(std::size_t x, std::size_t n, Exec exec) const {
  const std::size_t d = dim(n);
  return assemble_columns(d, d, [&](std::size_t c) { return rho(x, n, unit(d, c)); }, exec);
}

std::size_t CochainComplex::tensor_dim(std::size_t n) const { return ipow(algebra().dim(), n) * module_.dim(); }

std::vector<std::size_t> CochainComplex::tensor_word(std::size_t n, std::size_t word_index) const {
  std::vector<std::size_t> w(n);
  const std::size_t ds = algebra().dim();
  for (std::size_t k = n; k-- > 0;) {
    w[k] = word_index % ds;
    word_index /= ds;
  }
  return w;
}

Degree CochainComplex::tensor_degree(std::size_t n, std::size_t pos) const {
  const GradedAlgebra& a = algebra();
  const GradingGroup& g = a.group();
  Degree deg = module_.degree(pos % module_.dim());
  for (std::size_t x : tensor_word(n, pos / module_.dim())) deg = g.sub(deg, a.degree(x));
  return deg;
}

Vec CochainComplex::to_tensor(std::size_t n, const Vec& f) const {
  const std::size_t d = module_.dim(), words = ipow(algebra().dim(), n);
  Vec out(words * d);
  for (std::size_t wi = 0; wi < words; ++wi) {
    Vec v = evaluate(n, f, tensor_word(n, wi));
    for (std::size_t l = 0; l < d; ++l) out[wi * d + l] = v[l];
  }
  return out;
}

std::optional<Vec> CochainComplex::from_tensor(std::size_t n, const Vec& t) const {
  const CochainSpace& sp = space(n);
  const std::size_t ds = algebra().dim(), d = module_.dim();
  Vec f(sp.size());
  for (std::size_t mono = 0; mono < sp.monomials().size(); ++mono)
    for (std::size_t last = 0; last < ds; ++last) {
      std::size_t wi = 0;
      for (std::size_t x : sp.monomials()[mono]) wi = wi * ds + x;
      wi = wi * ds + last;
      for (std::size_t l = 0; l < d; ++l) f[sp.position(mono, last, l)] = t[wi * d + l];
    }
  if (to_tensor(n, f) != t) return std::nullopt;
  return f;
}

Vec CochainComplex::face(std::size_t t, std::size_t n, const Vec& tensor) const {
  const std::size_t ds = algebra().dim(), d = module_.dim();
  const std::size_t out_words = ipow(ds, n + 1);
  Vec out(out_words * d);
  if (t == 0 || t > n) return out;
  std::vector<Degree> degs(tensor.size());
  for (std::size_t p = 0; p < tensor.size(); ++p)
    if (!tensor[p].is_zero()) degs[p] = tensor_degree(n, p);
  for (const auto& [beta, comp] : homogeneous_components(degs, tensor)) {
    WordEvaluator eval = [&, &comp = comp](const std::vector<std::size_t>& w) {
      std::size_t wi = 0;
      for (std::size_t x : w) wi = wi * ds + x;
      return Vec(comp.begin() + static_cast<std::ptrdiff_t>(wi * d),
                 comp.begin() + static_cast<std::ptrdiff_t>((wi + 1) * d));
    };
    for (std::size_t wi = 0; wi < out_words; ++wi) {
      Vec v = face_value(module_, t, beta, tensor_word(n + 1, wi), eval);
      for (std::size_t l = 0; l < d; ++l)
        if (!v[l].is_zero()) out[wi * d + l] += v[l];
    }
  }
  return out;
}

ExactMatrix CochainComplex::face_matrix(std::size_t t, std::size_t n, Exec exec) const {
  const std::size_t cols = tensor_dim(n), rows = tensor_dim(n + 1);
  return assemble_columns(rows, cols, [&](std::size_t c) { return face(t, n, unit(cols, c)); }, exec);
}

CEComplex::CEComplex(LieModule m)
    : module_(std::move(m)), rules_(wedge_rules(module_.lie)), group_(module_.lie.factor().group()) {}

const CochainSpace& CEComplex::space(std::size_t i) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = spaces_[i];
  if (!slot) {
    std::vector<Degree> sd, vd;
    for (std::size_t k = 0; k < module_.lie.dim(); ++k) sd.push_back(module_.lie.degree(k));
    for (std::size_t l = 0; l < module_.dim(); ++l) vd.push_back(module_.degree(l));
    slot = std::make_unique<CochainSpace>(rules_, group_, std::move(sd), std::move(vd), i, false);
  }
  return *slot;
}

Vec CEComplex::coboundary(std::size_t i, const Vec& f) const {
  Vec out(space(i + 1).size());
  for (const auto& [beta, comp] : homogeneous_components(space(i).degrees(), f)) {
    Vec part = coboundary_homogeneous(i, comp, beta);
    axpy(out, Scalar(1), part);
  }
  return out;
}

Vec CEComplex::coboundary_homogeneous(std::size_t i, const Vec& f, const Degree& beta) const {
  const EpsilonLieAlgebra& g = module_.lie;
  const CommutationFactor& eps = g.factor();
  const CochainSpace& in = space(i);
  const CochainSpace& out_space = space(i + 1);
  auto eval = [&](const std::vector<std::size_t>& w) { return in.evaluate(rules_, f, w); };
  Vec out(out_space.size());
  for (std::size_t mono = 0; mono < out_space.monomials().size(); ++mono) {
    const auto& args = out_space.monomials()[mono];
    Vec v(module_.dim());
    // -Σ_t (-1)^t ε(β + α_1 + ... + α_{t-1}, α_t) [x_t, f(..., x̂_t, ...)]
    Degree pre = beta;
    for (std::size_t t = 1; t <= i + 1; ++t) {
      std::vector<std::size_t> w;
      for (std::size_t k = 0; k <= i; ++k)
        if (k != t - 1) w.push_back(args[k]);
      const Scalar c = eps(pre, g.degree(args[t - 1]));
      axpy(v, t % 2 == 1 ? c : -c, module_.act(args[t - 1], eval(w)));
      pre = group_.add(pre, g.degree(args[t - 1]));
    }
    // Σ_{s<t} (-1)^s ε(α_s, α_{s+1} + ... + α_{t-1}) f(..., x̂_s, ..., [x_s, x_t], ...)
    for (std::size_t s = 1; s <= i + 1; ++s) {
      std::vector<std::size_t> w;
      for (std::size_t k = 0; k <= i; ++k)
        if (k != s - 1) w.push_back(args[k]);
      Degree acc = group_.zero();
      for (std::size_t t = s + 1; t <= i + 1; ++t) {
        const std::size_t xs = args[s - 1], xt = args[t - 1];
        Scalar c = eps(g.degree(xs), acc);
        if (s % 2 == 1) c = -c;
        const Vec& br = g.bracket(xs, xt);
        for (std::size_t k = 0; k < br.size(); ++k) {
          if (br[k].is_zero()) continue;
          w[t - 2] = k;
          axpy(v, c * br[k], eval(w));
        }
        w[t - 2] = xt;
        acc = group_.add(acc, g.degree(xt));
      }
    }
    const std::size_t base = out_space.position(mono, 0, 0);
    for (std::size_t l = 0; l < v.size(); ++l) out[base + l] = v[l];
  }
  return out;
}

ExactMatrix CEComplex::coboundary_matrix(std::size_t i, Exec exec) const {
  const std::size_t cols = dim(i), rows = dim(i + 1);
  return assemble_columns(rows, cols, [&](std::size_t c) { return coboundary(i, unit(cols, c)); }, exec);
}

Vec CEComplex::xi(std::size_t x, std::size_t i, const Vec& f) const {
  const EpsilonLieAlgebra& g = module_.lie;
  const CommutationFactor& eps = g.factor();
  const CochainSpace& sp = space(i);
  const Degree& alpha = g.degree(x);
  Vec out(sp.size());
  for (const auto& [beta, comp] : homogeneous_components(sp.degrees(), f)) {
    auto eval = [&](const std::vector<std::size_t>& w) { return sp.evaluate(rules_, comp, w); };
    for (std::size_t mono = 0; mono < sp.monomials().size(); ++mono) {
      std::vector<std::size_t> w = sp.monomials()[mono];
      Vec v = module_.act(x, eval(w));
      Degree pre = beta;
      for (std::size_t j = 0; j < i; ++j) {
        const std::size_t xj = w[j];
        const Scalar c = eps(alpha, pre);
        const Vec& br = g.bracket(x, xj);
        for (std::size_t k = 0; k < br.size(); ++k) {
          if (br[k].is_zero()) continue;
          w[j] = k;
          axpy(v, -(c * br[k]), eval(w));
        }
        w[j] = xj;
        pre = group_.add(pre, g.degree(xj));
      }
      const std::size_t base = sp.position(mono, 0, 0);
      for (std::size_t l = 0; l < v.size(); ++l) out[base + l] += v[l];
    }
  }
  return out;
}

ExactMatrix CEComplex::xi_matrix(std::size_t x, std::size_t i, Exec exec) const {
  const std::size_t d = dim(i);
  return assemble_columns(d, d, [&](std::size_t c) { return xi(x, i, unit(d, c)); }, exec);
}

CEComplex ce_complex_of(const Bimodule& m) { return CEComplex(lie_module_of(hom_bimodule(m))); }

namespace {

/// Position in C^{i+1}(S,M) of each CE basis cochain of C^i(𝔤_S, C¹(S,M)).
std::vector<std::size_t> psi_positions(const CEComplex& ce, const CochainComplex& c, std::size_t i) {
  const CochainSpace& from = ce.space(i);
  const CochainSpace& to = c.space(i + 1);
  const std::size_t dm = c.module().dim();
  if (from.size() != to.size() || from.dim_value() != c.algebra().dim() * dm)
    throw std::invalid_argument("psi: complexes do not match");
  std::vector<std::size_t> pos(from.size());
  for (std::size_t p = 0; p < from.size(); ++p) {
    auto k = from.key(p);
    auto mono = to.monomial_index(from.monomials()[k.monomial]);
    if (!mono) throw std::invalid_argument("psi: monomial bases differ");
    pos[p] = to.position(*mono, k.value / dm, k.value % dm);
  }
  return pos;
}

}  // namespace

Vec psi(const CEComplex& ce, const CochainComplex& c, std::size_t i, const Vec& f) {
  auto pos = psi_positions(ce, c, i);
  Vec out(f.size());
  for (std::size_t p = 0; p < f.size(); ++p) out[pos[p]] = f[p];
  return out;
}

Vec psi_inv(const CEComplex& ce, const CochainComplex& c, std::size_t i, const Vec& g) {
  auto pos = psi_positions(ce, c, i);
  Vec out(g.size());
  for (std::size_t p = 0; p < g.size(); ++p) out[p] = g[pos[p]];
  return out;
}

ExactMatrix psi_matrix(const CEComplex& ce, const CochainComplex& c, std::size_t i) {
  auto pos = psi_positions(ce, c, i);
  ExactMatrix m(pos.size(), pos.size());
  for (std::size_t p = 0; p < pos.size(); ++p) m(pos[p], p) = Scalar(1);
  return m;
}

}  // namespace lsym
