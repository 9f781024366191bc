#pragma once

/**
 * @file group.hpp
 * @brief Finite groups as dense element ids with pluggable multiplication
 *        backends, plus the standard constructors.
 *
 * Every group numbers its elements 0..n-1 with 0 the identity. Inverses and
 * element orders are computed once at construction; products come from a
 * materialized Cayley table when n <= kTableThreshold and from the backend
 * otherwise. A FiniteGroup is immutable and cheap to copy.
 */

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "finite_field.hpp"
#include "permutation.hpp"

namespace powerchord {

using ElementId = std::uint32_t;

enum class BackendKind { table, permutation, matrix, product, projective };

inline const char *to_string(BackendKind k) {
  switch (k) {
  case BackendKind::table:
    return "cayley-table";
  case BackendKind::permutation:
    return "permutation";
  case BackendKind::matrix:
    return "matrix-over-field";
  case BackendKind::product:
    return "direct-product";
  case BackendKind::projective:
    return "projective-quotient";
  }
  return "unknown";
}

/// Supplies the multiplication of a group whose elements are already numbered.
class GroupBackend {
public:
  virtual ~GroupBackend() = default;
  virtual BackendKind kind() const = 0;
  virtual std::size_t size() const = 0;
  virtual ElementId multiply(ElementId a, ElementId b) const = 0;
  virtual std::string label(ElementId a) const = 0;
};

class FiniteGroup {
public:
  static constexpr std::size_t kSizeCap = 250000;
  static constexpr std::size_t kTableThreshold = 2048;

  FiniteGroup() = default;

  explicit FiniteGroup(std::shared_ptr<const GroupBackend> backend, std::string name = {}) {
    if (!backend || backend->size() == 0)
      throw ConstructionError("group backend is empty");
    if (backend->size() > kSizeCap)
      throw ConstructionError("group order " + std::to_string(backend->size()) + " exceeds cap " +
                              std::to_string(kSizeCap));
    auto d = std::make_shared<Data>();
    d->backend = std::move(backend);
    d->name = std::move(name);
    const std::size_t n = d->backend->size();
    if (n <= kTableThreshold) {
      d->table.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          d->table[a * n + b] = d->backend->multiply(static_cast<ElementId>(a), static_cast<ElementId>(b));
    }
    d->inverse.assign(n, 0);
    d->orders.assign(n, 0);
    data_ = d;
    compute_orders(*d);
  }

  std::size_t order() const { return data_ ? data_->inverse.size() : 0; }
  ElementId identity() const { return 0; }
  const std::string &name() const { return data_->name; }
  BackendKind backend_kind() const { return data_->backend->kind(); }
  const GroupBackend &backend() const { return *data_->backend; }
  bool has_table() const { return !data_->table.empty(); }

  /// Same group with a different display name.
  FiniteGroup renamed(std::string name) const {
    auto d = std::make_shared<Data>(*data_);
    d->name = std::move(name);
    FiniteGroup g;
    g.data_ = std::move(d);
    return g;
  }

  ElementId mul(ElementId a, ElementId b) const {
    const auto &d = *data_;
    if (!d.table.empty())
      return d.table[static_cast<std::size_t>(a) * d.inverse.size() + b];
    return d.backend->multiply(a, b);
  }

  ElementId inv(ElementId a) const { return data_->inverse[a]; }
  std::uint64_t element_order(ElementId a) const { return data_->orders[a]; }
  const std::vector<std::uint32_t> &element_orders() const { return data_->orders; }

  ElementId pow(ElementId a, std::int64_t k) const {
    const std::int64_t o = static_cast<std::int64_t>(element_order(a));
    k %= o;
    if (k < 0)
      k += o;
    ElementId r = identity();
    ElementId base = a;
    while (k) {
      if (k & 1)
        r = mul(r, base);
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }

  ElementId conjugate(ElementId x, ElementId g) const { return mul(mul(inv(g), x), g); }

  std::string label(ElementId a) const { return data_->backend->label(a); }

  bool valid(ElementId a) const { return a < order(); }

private:
  struct Data {
    std::shared_ptr<const GroupBackend> backend;
    std::string name;
    std::vector<ElementId> table;
    std::vector<ElementId> inverse;
    std::vector<std::uint32_t> orders;
  };

  void compute_orders(Data &d) {
    const std::size_t n = d.backend->size();
    for (std::size_t a = 0; a < n; ++a) {
      if (d.orders[a])
        continue;
      const auto x = static_cast<ElementId>(a);
      std::vector<ElementId> powers{x};
      ElementId y = x;
      while (y != 0) {
        y = mul(y, x);
        if (powers.size() > n)
          throw InternalError("element " + std::to_string(a) + " has no finite order; backend is not a group");
        powers.push_back(y);
      }
      // powers = x, x^2, ..., x^o = e
      const std::size_t o = powers.size();
      d.orders[a] = static_cast<std::uint32_t>(o);
      d.inverse[a] = o == 1 ? x : powers[o - 2];
    }
    if (d.orders[0] != 1)
      throw ConstructionError("element 0 is not the identity");
  }

  std::shared_ptr<const Data> data_;
};

// ---------------------------------------------------------------------------
// Backends

/**
 * Metacyclic group <a, b | a^n = 1, b^m = a^s, b a b^-1 = a^r>.
 * Element a^i b^j has id i + n*j.
 */
class MetacyclicBackend final : public GroupBackend {
public:
  MetacyclicBackend(std::uint64_t n, std::uint64_t m, std::uint64_t r, std::uint64_t s)
      : n_(n), m_(m), r_(n ? r % n : 0), s_(n ? s % n : 0) {
    if (n == 0 || m == 0)
      throw InvalidInput("metacyclic parameters n and m must be positive");
    if (n * m > FiniteGroup::kSizeCap)
      throw ConstructionError("metacyclic order " + std::to_string(n * m) + " exceeds cap");
    rpow_.resize(m + 1);
    rpow_[0] = 1 % n;
    for (std::uint64_t j = 1; j <= m; ++j)
      rpow_[j] = (rpow_[j - 1] * r_) % n;
    if (rpow_[m] != 1 % n)
      throw ConstructionError("metacyclic: r^m must be 1 mod n");
    if ((r_ * s_) % n != s_)
      throw ConstructionError("metacyclic: r*s must equal s mod n");
  }

  BackendKind kind() const override { return BackendKind::table; }
  std::size_t size() const override { return n_ * m_; }

  ElementId multiply(ElementId x, ElementId y) const override {
    const std::uint64_t i = x % n_, j = x / n_, k = y % n_, l = y / n_;
    std::uint64_t a = (i + k * rpow_[j]) % n_;
    std::uint64_t b = j + l;
    if (b >= m_) {
      b -= m_;
      a = (a + s_) % n_;
    }
    return static_cast<ElementId>(a + n_ * b);
  }

  std::string label(ElementId x) const override {
    const std::uint64_t i = x % n_, j = x / n_;
    if (i == 0 && j == 0)
      return "1";
    std::string out;
    if (i)
      out += i == 1 ? "a" : "a^" + std::to_string(i);
    if (j)
      out += j == 1 ? "b" : "b^" + std::to_string(j);
    return out;
  }

  ElementId element(std::uint64_t i, std::uint64_t j) const { return static_cast<ElementId>(i % n_ + n_ * (j % m_)); }
  std::uint64_t n() const { return n_; }
  std::uint64_t m() const { return m_; }

private:
  std::uint64_t n_, m_, r_, s_;
  std::vector<std::uint64_t> rpow_;
};

/// Elements are explicit permutations; index kept in a hash map.
class PermutationBackend final : public GroupBackend {
public:
  explicit PermutationBackend(std::vector<Permutation> elements) : elements_(std::move(elements)) {
    if (elements_.empty())
      throw ConstructionError("permutation group has no elements");
    if (!elements_.front().is_identity())
      throw ConstructionError("first permutation must be the identity");
    index_.reserve(elements_.size() * 2);
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (!index_.emplace(elements_[i], static_cast<ElementId>(i)).second)
        throw ConstructionError("duplicate permutation in element list");
  }

  BackendKind kind() const override { return BackendKind::permutation; }
  std::size_t size() const override { return elements_.size(); }

  ElementId multiply(ElementId a, ElementId b) const override {
    auto it = index_.find(elements_[a] * elements_[b]);
    if (it == index_.end())
      throw InternalError("permutation set is not closed under multiplication");
    return it->second;
  }

  std::string label(ElementId a) const override { return elements_[a].to_cycle_string(); }

  std::size_t degree() const { return elements_.front().degree(); }
  const Permutation &element(ElementId a) const { return elements_[a]; }
  std::optional<ElementId> find(const Permutation &p) const {
    auto it = index_.find(p);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

private:
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
};

/**
 * d x d matrices over GF(q). A matrix is encoded as the base-q integer of its
 * row-major entries with the (0,0) entry most significant, so numeric order on
 * codes is lexicographic order on row-major entry lists.
 */
class MatrixCodec {
public:
  MatrixCodec(std::shared_ptr<const FiniteField> field, unsigned d) : field_(std::move(field)), d_(d) {
    if (d_ < 1 || d_ > 3)
      throw InvalidInput("matrix dimension must be 1, 2 or 3");
    const std::uint64_t q = field_->order();
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d_ * d_; ++i) {
      total *= q;
      if (total > 10000000)
        throw ConstructionError("q^(d^2) exceeds the 10^7 enumeration limit");
    }
    count_ = total;
  }

  using Code = std::uint32_t;
  using Entries = std::vector<FiniteField::Element>;

  const FiniteField &field() const { return *field_; }
  std::shared_ptr<const FiniteField> field_ptr() const { return field_; }
  unsigned dimension() const { return d_; }
  std::uint64_t code_count() const { return count_; }

  Entries decode(Code c) const {
    const std::size_t k = d_ * d_;
    Entries e(k);
    const auto q = static_cast<Code>(field_->order());
    for (std::size_t i = k; i-- > 0;) {
      e[i] = c % q;
      c /= q;
    }
    return e;
  }

  Code encode(const Entries &e) const {
    std::uint64_t c = 0;
    for (auto x : e)
      c = c * field_->order() + x;
    return static_cast<Code>(c);
  }

  Code identity_code() const {
    Entries e(d_ * d_, 0);
    for (unsigned i = 0; i < d_; ++i)
      e[i * d_ + i] = 1;
    return encode(e);
  }

  Entries multiply(const Entries &a, const Entries &b) const {
    const auto &F = *field_;
    Entries c(d_ * d_, 0);
    for (unsigned i = 0; i < d_; ++i)
      for (unsigned j = 0; j < d_; ++j) {
        FiniteField::Element s = 0;
        for (unsigned k = 0; k < d_; ++k)
          s = F.add(s, F.mul(a[i * d_ + k], b[k * d_ + j]));
        c[i * d_ + j] = s;
      }
    return c;
  }

  Code multiply(Code a, Code b) const { return encode(multiply(decode(a), decode(b))); }

  FiniteField::Element determinant(const Entries &m) const {
    const auto &F = *field_;
    if (d_ == 1)
      return m[0];
    if (d_ == 2)
      return F.sub(F.mul(m[0], m[3]), F.mul(m[1], m[2]));
    auto minor = [&](unsigned a, unsigned b, unsigned c, unsigned d) { return F.sub(F.mul(m[a], m[d]), F.mul(m[b], m[c])); };
    FiniteField::Element t = F.mul(m[0], minor(4, 5, 7, 8));
    t = F.sub(t, F.mul(m[1], minor(3, 5, 6, 8)));
    t = F.add(t, F.mul(m[2], minor(3, 4, 6, 7)));
    return t;
  }

  Entries scale(const Entries &m, FiniteField::Element lambda) const {
    Entries out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      out[i] = field_->mul(lambda, m[i]);
    return out;
  }

  std::string label(Code c) const {
    const auto e = decode(c);
    std::string out = "[";
    for (unsigned i = 0; i < d_; ++i) {
      out += i ? ",[" : "[";
      for (unsigned j = 0; j < d_; ++j) {
        if (j)
          out += ",";
        out += std::to_string(e[i * d_ + j]);
      }
      out += "]";
    }
    return out + "]";
  }

private:
  std::shared_ptr<const FiniteField> field_;
  unsigned d_;
  std::uint64_t count_ = 0;
};

class MatrixBackend final : public GroupBackend {
public:
  MatrixBackend(MatrixCodec codec, std::vector<MatrixCodec::Code> elements)
      : codec_(std::move(codec)), elements_(std::move(elements)) {
    if (elements_.empty() || elements_.front() != codec_.identity_code())
      throw ConstructionError("matrix group must list the identity first");
    index_.reserve(elements_.size() * 2);
    for (std::size_t i = 0; i < elements_.size(); ++i)
      index_.emplace(elements_[i], static_cast<ElementId>(i));
  }

  BackendKind kind() const override { return BackendKind::matrix; }
  std::size_t size() const override { return elements_.size(); }

  ElementId multiply(ElementId a, ElementId b) const override {
    auto it = index_.find(codec_.multiply(elements_[a], elements_[b]));
    if (it == index_.end())
      throw InternalError("matrix set is not closed under multiplication");
    return it->second;
  }

  std::string label(ElementId a) const override { return codec_.label(elements_[a]); }

  const MatrixCodec &codec() const { return codec_; }
  MatrixCodec::Code code(ElementId a) const { return elements_[a]; }
  std::optional<ElementId> find(MatrixCodec::Code c) const {
    auto it = index_.find(c);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

private:
  MatrixCodec codec_;
  std::vector<MatrixCodec::Code> elements_;
  std::unordered_map<MatrixCodec::Code, ElementId> index_;
};

/**
 * Quotient of a matrix group by the scalar matrices lambda*I with
 * lambda^d = 1. Each coset is represented by the least code among its
 * scalar multiples.
 */
class ProjectiveBackend final : public GroupBackend {
public:
  ProjectiveBackend(MatrixCodec codec, std::vector<FiniteField::Element> scalars, std::vector<MatrixCodec::Code> reps)
      : codec_(std::move(codec)), scalars_(std::move(scalars)), reps_(std::move(reps)) {
    index_.reserve(reps_.size() * 2);
    for (std::size_t i = 0; i < reps_.size(); ++i)
      index_.emplace(reps_[i], static_cast<ElementId>(i));
  }

  BackendKind kind() const override { return BackendKind::projective; }
  std::size_t size() const override { return reps_.size(); }

  ElementId multiply(ElementId a, ElementId b) const override {
    const auto prod = codec_.multiply(codec_.decode(reps_[a]), codec_.decode(reps_[b]));
    auto it = index_.find(canonical(prod));
    if (it == index_.end())
      throw InternalError("projective quotient is not closed under multiplication");
    return it->second;
  }

  std::string label(ElementId a) const override { return codec_.label(reps_[a]); }

  MatrixCodec::Code canonical(const MatrixCodec::Entries &m) const {
    MatrixCodec::Code best = codec_.encode(m);
    for (auto lambda : scalars_)
      best = std::min(best, codec_.encode(codec_.scale(m, lambda)));
    return best;
  }

  const MatrixCodec &codec() const { return codec_; }
  const std::vector<FiniteField::Element> &scalars() const { return scalars_; }
  MatrixCodec::Code code(ElementId a) const { return reps_[a]; }

private:
  MatrixCodec codec_;
  std::vector<FiniteField::Element> scalars_;
  std::vector<MatrixCodec::Code> reps_;
  std::unordered_map<MatrixCodec::Code, ElementId> index_;
};

/// G x H with (g, h) numbered g*|H| + h.
class ProductBackend final : public GroupBackend {
public:
  ProductBackend(FiniteGroup g, FiniteGroup h) : g_(std::move(g)), h_(std::move(h)) {
    const std::uint64_t n = static_cast<std::uint64_t>(g_.order()) * h_.order();
    if (n > FiniteGroup::kSizeCap)
      throw ConstructionError("direct product order " + std::to_string(n) + " exceeds cap");
  }

  BackendKind kind() const override { return BackendKind::product; }
  std::size_t size() const override { return g_.order() * h_.order(); }

  ElementId multiply(ElementId a, ElementId b) const override {
    const auto [a1, a2] = split(a);
    const auto [b1, b2] = split(b);
    return pair(g_.mul(a1, b1), h_.mul(a2, b2));
  }

  std::string label(ElementId a) const override {
    const auto [x, y] = split(a);
    return "(" + g_.label(x) + ", " + h_.label(y) + ")";
  }

  std::pair<ElementId, ElementId> split(ElementId a) const {
    const auto m = static_cast<ElementId>(h_.order());
    return {a / m, a % m};
  }
  ElementId pair(ElementId x, ElementId y) const { return static_cast<ElementId>(x * h_.order() + y); }
  const FiniteGroup &left() const { return g_; }
  const FiniteGroup &right() const { return h_; }

private:
  FiniteGroup g_, h_;
};

// ---------------------------------------------------------------------------
// Constructors

inline FiniteGroup metacyclic(std::uint64_t n, std::uint64_t m, std::uint64_t r, std::uint64_t s, std::string name = {}) {
  return FiniteGroup(std::make_shared<MetacyclicBackend>(n, m, r, s), std::move(name));
}

inline FiniteGroup cyclic(std::uint64_t n) {
  if (n == 0)
    throw InvalidInput("cyclic: n must be positive");
  return metacyclic(n, 1, 1, 0, "C" + std::to_string(n));
}

/// D_n of order 2n.
inline FiniteGroup dihedral(std::uint64_t n) {
  if (n == 0)
    throw InvalidInput("dihedral: n must be positive");
  return metacyclic(n, 2, n - 1, 0, "D" + std::to_string(n));
}

/// Dic_n of order 4n: a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1.
inline FiniteGroup dicyclic(std::uint64_t n) {
  if (n < 2)
    throw InvalidInput("dicyclic: n must be at least 2");
  return metacyclic(2 * n, 2, 2 * n - 1, n, "Dic" + std::to_string(n));
}

inline FiniteGroup from_permutations(std::vector<Permutation> elements, std::string name = {}) {
  return FiniteGroup(std::make_shared<PermutationBackend>(std::move(elements)), std::move(name));
}

/// Breadth-first closure; ids follow discovery order with generators tried in list order.
inline FiniteGroup from_permutation_generators(const std::vector<Permutation> &gens, std::string name = {},
                                               std::size_t cap = FiniteGroup::kSizeCap) {
  if (gens.empty())
    throw InvalidInput("at least one generator is required");
  const std::size_t deg = gens.front().degree();
  for (const auto &g : gens)
    if (g.degree() != deg)
      throw InvalidInput("generators act on different point counts");
  std::vector<Permutation> elements{Permutation::identity(deg)};
  std::unordered_map<Permutation, ElementId, PermutationHash> seen;
  seen.emplace(elements.front(), 0);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto &g : gens) {
      Permutation y = elements[head] * g;
      if (seen.count(y))
        continue;
      if (elements.size() >= cap)
        throw ConstructionError("generated group exceeds cap " + std::to_string(cap));
      seen.emplace(y, static_cast<ElementId>(elements.size()));
      elements.push_back(std::move(y));
    }
  }
  return from_permutations(std::move(elements), std::move(name));
}

namespace detail {
inline std::vector<Permutation> all_permutations(std::size_t n, bool even_only) {
  std::vector<Permutation::Point> im(n);
  std::iota(im.begin(), im.end(), Permutation::Point{0});
  std::vector<Permutation> out;
  do {
    Permutation p(im);
    if (!even_only || p.is_even())
      out.push_back(std::move(p));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}
} // namespace detail

inline FiniteGroup symmetric(std::size_t n) {
  if (n < 1 || n > 8)
    throw ConstructionError("symmetric: n must be in 1..8, got " + std::to_string(n));
  return from_permutations(detail::all_permutations(n, false), "S" + std::to_string(n));
}

inline FiniteGroup alternating(std::size_t n) {
  if (n < 1 || n > 8)
    throw ConstructionError("alternating: n must be in 1..8, got " + std::to_string(n));
  return from_permutations(detail::all_permutations(n, true), "A" + std::to_string(n));
}

inline FiniteGroup direct_product(const FiniteGroup &g, const FiniteGroup &h) {
  std::string name = g.name().empty() || h.name().empty() ? std::string{} : g.name() + " x " + h.name();
  return FiniteGroup(std::make_shared<ProductBackend>(g, h), std::move(name));
}

namespace detail {
inline FiniteGroup matrix_group(std::uint64_t q, unsigned d, bool special, std::string name) {
  MatrixCodec codec(std::make_shared<FiniteField>(q), d);
  const auto id = codec.identity_code();
  std::vector<MatrixCodec::Code> elements{id};
  for (std::uint64_t c = 0; c < codec.code_count(); ++c) {
    const auto code = static_cast<MatrixCodec::Code>(c);
    if (code == id)
      continue;
    const auto det = codec.determinant(codec.decode(code));
    if (special ? det == 1 : det != 0) {
      if (elements.size() >= FiniteGroup::kSizeCap)
        throw ConstructionError(name + " exceeds the group size cap");
      elements.push_back(code);
    }
  }
  return FiniteGroup(std::make_shared<MatrixBackend>(std::move(codec), std::move(elements)), std::move(name));
}
} // namespace detail

/// SL(d, q) by filtering all q^(d^2) matrices on determinant 1.
inline FiniteGroup special_linear(std::uint64_t q, unsigned d) {
  return detail::matrix_group(q, d, true, "SL(" + std::to_string(d) + "," + std::to_string(q) + ")");
}

inline FiniteGroup general_linear(std::uint64_t q, unsigned d) {
  return detail::matrix_group(q, d, false, "GL(" + std::to_string(d) + "," + std::to_string(q) + ")");
}

/// G / {lambda I : lambda^d = 1 and lambda I in G}; G must be matrix-backed.
inline FiniteGroup projective_quotient(const FiniteGroup &g, std::string name = {}) {
  const auto *mb = dynamic_cast<const MatrixBackend *>(&g.backend());
  if (!mb)
    throw ConstructionError("projective_quotient needs a matrix-backed group");
  const auto &codec = mb->codec();
  const auto &F = codec.field();
  const unsigned d = codec.dimension();
  std::vector<FiniteField::Element> scalars;
  for (FiniteField::Element lambda = 1; lambda < F.order(); ++lambda) {
    if (F.pow(lambda, d) != 1)
      continue;
    MatrixCodec::Entries s(d * d, 0);
    for (unsigned i = 0; i < d; ++i)
      s[i * d + i] = lambda;
    if (mb->find(codec.encode(s)))
      scalars.push_back(lambda);
  }
  ProjectiveBackend probe(codec, scalars, {});
  std::vector<MatrixCodec::Code> reps{codec.identity_code()};
  for (ElementId a = 1; a < g.order(); ++a) {
    const auto c = mb->code(a);
    if (probe.canonical(codec.decode(c)) == c)
      reps.push_back(c);
  }
  if (reps.front() != probe.canonical(codec.decode(codec.identity_code())))
    throw InternalError("identity is not its own coset representative");
  if (reps.size() * scalars.size() != g.order())
    throw InternalError("scalar cosets do not partition the group");
  if (name.empty() && g.name().size() > 0)
    name = "P" + g.name();
  return FiniteGroup(std::make_shared<ProjectiveBackend>(codec, std::move(scalars), std::move(reps)), std::move(name));
}

inline FiniteGroup projective_special_linear(std::uint64_t q, unsigned d) {
  return projective_quotient(special_linear(q, d));
}

} // namespace powerchord
