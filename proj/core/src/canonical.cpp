#include "digitop/canonical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "bit_matrix.hpp"

namespace digitop {

namespace detail {

namespace {

class Canonicalizer {
 public:
  explicit Canonicalizer(const BitMatrix& m) : m_(m), n_(m.size()), nbrs_(n_) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (m_.test(i, j)) nbrs_[i].push_back(j);
  }

  Labeling run() {
    std::vector<int> color(n_, 0);
    if (n_ > 0) search(std::move(color));
    Labeling out;
    out.form = header();
    out.form += best_;
    out.order = best_order_;
    return out;
  }

 private:
  std::string header() const {
    std::string h(4, '\0');
    for (int b = 0; b < 4; ++b) h[b] = static_cast<char>((n_ >> (8 * (3 - b))) & 0xff);
    return h;
  }

  // Replace colors by dense ranks, preserving their order.
  static int renumber(std::vector<int>& color) {
    std::vector<int> values(color);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (auto& c : color)
      c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
    return static_cast<int>(values.size());
  }

  // Equitable refinement: split cells by the multiset of neighbor colors
  // until stable. Cells keep their relative order.
  void refine(std::vector<int>& color) const {
    int cells = renumber(color);
    std::vector<std::vector<int>> sig(n_);
    std::vector<std::size_t> idx(n_);
    for (;;) {
      for (std::size_t v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        for (auto u : nbrs_[v]) s.push_back(color[u]);
        std::sort(s.begin(), s.end());
        s.insert(s.begin(), color[v]);
      }
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
      std::vector<int> next(n_);
      int rank = 0;
      for (std::size_t k = 0; k < n_; ++k) {
        if (k > 0 && sig[idx[k]] != sig[idx[k - 1]]) ++rank;
        next[idx[k]] = rank;
      }
      int next_cells = n_ == 0 ? 0 : rank + 1;
      color.swap(next);
      if (next_cells == cells) return;
      cells = next_cells;
    }
  }

  // True when swapping a and b is an automorphism of the graph.
  bool twins(std::size_t a, std::size_t b) const {
    const auto* ra = m_.row(a);
    const auto* rb = m_.row(b);
    for (std::size_t w = 0; w < m_.words(); ++w) {
      std::uint64_t mask = ~std::uint64_t{0};
      if (a / 64 == w) mask &= ~(std::uint64_t{1} << (a % 64));
      if (b / 64 == w) mask &= ~(std::uint64_t{1} << (b % 64));
      if ((ra[w] & mask) != (rb[w] & mask)) return false;
    }
    return true;
  }

  void leaf(const std::vector<int>& color) {
    std::vector<std::size_t> order(n_);
    for (std::size_t v = 0; v < n_; ++v) order[static_cast<std::size_t>(color[v])] = v;
    std::string bits((n_ * (n_ - 1) / 2 + 7) / 8, '\0');
    std::size_t k = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j, ++k)
        if (m_.test(order[i], order[j])) bits[k / 8] = static_cast<char>(bits[k / 8] | (0x80 >> (k % 8)));
    if (!have_best_ || bits > best_) {
      best_ = std::move(bits);
      best_order_ = std::move(order);
      have_best_ = true;
    }
  }

  void search(std::vector<int> color) {
    refine(color);
    std::vector<int> count(n_, 0);
    for (int c : color) ++count[static_cast<std::size_t>(c)];
    int target = -1;
    for (std::size_t c = 0; c < n_; ++c) {
      if (count[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    }
    if (target < 0) {
      leaf(color);
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      bool redundant = std::any_of(tried.begin(), tried.end(), [&](std::size_t t) { return twins(t, v); });
      if (redundant) continue;
      tried.push_back(v);
      std::vector<int> child(n_);
      for (std::size_t u = 0; u < n_; ++u) child[u] = 2 * color[u] + ((color[u] == target && u != v) ? 1 : 0);
      search(std::move(child));
    }
  }

  const BitMatrix& m_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> nbrs_;
  std::string best_;
  std::vector<std::size_t> best_order_;
  bool have_best_ = false;
};

}  // namespace

Labeling canonical_labeling(const BitMatrix& m) { return Canonicalizer(m).run(); }

}  // namespace detail

std::size_t CanonicalForm::vertex_count() const noexcept {
  if (bytes_.size() < 4) return 0;
  std::size_t n = 0;
  for (int b = 0; b < 4; ++b) n = (n << 8) | static_cast<unsigned char>(bytes_[b]);
  return n;
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  return std::hash<std::string>{}(f.bytes());
}

namespace {

detail::BitMatrix to_matrix(const Graph& g) {
  detail::BitMatrix m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (auto j : g.neighbors(i))
      if (j > i) m.set(i, j);
  return m;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  auto raw = detail::canonical_labeling(to_matrix(g));
  CanonicalLabeling out{CanonicalForm(std::move(raw.form)), {}};
  out.order.reserve(raw.order.size());
  for (auto i : raw.order) out.order.push_back(g.label(i));
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

std::optional<std::map<VertexId, VertexId>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return std::nullopt;
  auto lg = canonical_labeling(g);
  auto lh = canonical_labeling(h);
  if (lg.form != lh.form) return std::nullopt;
  std::map<VertexId, VertexId> out;
  for (std::size_t k = 0; k < lg.order.size(); ++k) out.emplace(lg.order[k], lh.order[k]);
  return out;
}

}  // namespace digitop
