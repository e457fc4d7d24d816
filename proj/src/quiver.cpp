#include "qpcluster/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "internal.hpp"

namespace qpc {

Quiver::Quiver(int vertex_count, int principal_count, std::vector<Arrow> arrows)
    : n_(vertex_count), m_(principal_count), arrows_(std::move(arrows)) {
  if (n_ < 1) throw std::invalid_argument("quiver needs at least one vertex");
  if (m_ < 1 || m_ > n_) throw std::invalid_argument("principal count must lie in 1..n");
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (a.label.empty()) throw std::invalid_argument("arrow with empty label");
    if (!has_vertex(a.source) || !has_vertex(a.target))
      throw std::invalid_argument("arrow '" + a.label + "' has an endpoint outside 1.." + std::to_string(n_));
    if (a.source == a.target) throw std::invalid_argument("arrow '" + a.label + "' is a loop");
    if (!index_.emplace(a.label, i).second)
      throw std::invalid_argument("duplicate arrow label '" + a.label + "'");
  }
}

bool Quiver::has_arrow(std::string_view label) const { return index_.count(std::string(label)) != 0; }

const Arrow& Quiver::arrow(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) throw std::out_of_range("unknown arrow '" + std::string(label) + "'");
  return arrows_[it->second];
}

int Quiver::multiplicity(Vertex from, Vertex to) const {
  int c = 0;
  for (const auto& a : arrows_) c += (a.source == from && a.target == to);
  return c;
}

std::vector<const Arrow*> Quiver::arrows_between(Vertex from, Vertex to) const {
  std::vector<const Arrow*> out;
  for (const auto& a : arrows_)
    if (a.source == from && a.target == to) out.push_back(&a);
  return out;
}

std::vector<const Arrow*> Quiver::arrows_into(Vertex v) const {
  std::vector<const Arrow*> out;
  for (const auto& a : arrows_)
    if (a.target == v) out.push_back(&a);
  return out;
}

std::vector<const Arrow*> Quiver::arrows_out_of(Vertex v) const {
  std::vector<const Arrow*> out;
  for (const auto& a : arrows_)
    if (a.source == v) out.push_back(&a);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Quiver::two_cycles() const {
  std::set<std::pair<Vertex, Vertex>> dirs;
  for (const auto& a : arrows_) dirs.emplace(a.source, a.target);
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& [i, j] : dirs)
    if (i < j && dirs.count({j, i})) out.emplace_back(i, j);
  return out;
}

bool Quiver::has_two_cycle_through(Vertex v) const {
  for (const auto& [i, j] : two_cycles())
    if (i == v || j == v) return true;
  return false;
}

bool Quiver::is_acyclic() const {
  // Kahn's algorithm on the underlying simple digraph.
  std::vector<int> indeg(n_ + 1, 0);
  std::vector<std::vector<Vertex>> succ(n_ + 1);
  for (const auto& a : arrows_) {
    succ[a.source].push_back(a.target);
    ++indeg[a.target];
  }
  std::vector<Vertex> ready;
  for (Vertex v = 1; v <= n_; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++seen;
    for (Vertex w : succ[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return seen == n_;
}

ExchangeMatrix exchange_matrix(const Quiver& q) {
  const int n = q.vertex_count();
  const int m = q.principal_count();
  ExchangeMatrix b(n, m);
  for (const auto& a : q.arrows()) {
    // arrow i -> j contributes -1 to b_ij and +1 to b_ji
    if (a.target <= m) b(a.source - 1, a.target - 1) -= 1;
    if (a.source <= m) b(a.target - 1, a.source - 1) += 1;
  }
  return b;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, Vertex s) {
  if (s < 1 || s > b.cols()) throw std::invalid_argument("mutation index outside the principal block");
  const int k = s - 1;
  ExchangeMatrix out(b.rows(), b.cols());
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else {
        const long long bik = b(i, k);
        const long long bkj = b(k, j);
        out(i, j) = b(i, j) + (std::llabs(bik) * bkj + bik * std::llabs(bkj)) / 2;
      }
    }
  return out;
}

namespace detail {

Quiver premutated_quiver(const Quiver& q, Vertex s, std::optional<int> degree) {
  if (!q.is_principal(s)) throw std::invalid_argument("cannot mutate at frozen or missing vertex " + std::to_string(s));
  if (q.has_two_cycle_through(s))
    throw std::invalid_argument("quiver has a 2-cycle through vertex " + std::to_string(s));
  std::vector<Arrow> arrows;
  for (const auto& a : q.arrows())
    if (a.source != s && a.target != s) arrows.push_back(a);
  const auto outs = q.arrows_out_of(s);
  const auto ins = q.arrows_into(s);
  for (const Arrow* a : outs)
    for (const Arrow* b : ins)
      arrows.push_back({composite_label(a->label, b->label), b->source, a->target,
                        degree ? a->weight + b->weight : 1});
  for (const auto& a : q.arrows()) {
    if (a.source == s)
      arrows.push_back({reversed_label(a.label), a.target, s, degree ? *degree - a.weight : 1});
    else if (a.target == s)
      arrows.push_back({reversed_label(a.label), s, a.source, degree ? -a.weight : 1});
  }
  return Quiver(q.vertex_count(), q.principal_count(), std::move(arrows));
}

}  // namespace detail

Quiver mutate_quiver(const Quiver& q, Vertex s) {
  if (!q.is_two_cycle_free()) throw std::invalid_argument("mutate_quiver: input has a 2-cycle");
  Quiver pre = detail::premutated_quiver(q, s, std::nullopt);
  std::set<Label> deleted;
  for (const auto& [i, j] : pre.two_cycles()) {
    auto forward = pre.arrows_between(i, j);
    auto backward = pre.arrows_between(j, i);
    const std::size_t r = std::min(forward.size(), backward.size());
    auto by_label = [](const Arrow* x, const Arrow* y) { return x->label < y->label; };
    std::sort(forward.begin(), forward.end(), by_label);
    std::sort(backward.begin(), backward.end(), by_label);
    for (std::size_t k = 0; k < r; ++k) {
      deleted.insert(forward[k]->label);
      deleted.insert(backward[k]->label);
    }
  }
  std::vector<Arrow> kept;
  for (const auto& a : pre.arrows())
    if (!deleted.count(a.label)) kept.push_back(a);
  return Quiver(q.vertex_count(), q.principal_count(), std::move(kept));
}

bool same_up_to_relabeling(const Quiver& a, const Quiver& b) {
  if (a.vertex_count() != b.vertex_count() || a.principal_count() != b.principal_count()) return false;
  if (a.arrow_count() != b.arrow_count()) return false;
  std::map<std::pair<Vertex, Vertex>, int> ca, cb;
  for (const auto& x : a.arrows()) ++ca[{x.source, x.target}];
  for (const auto& x : b.arrows()) ++cb[{x.source, x.target}];
  return ca == cb;
}

long long ringel_form(const Quiver& q, const DimensionVector& a, const DimensionVector& b) {
  const auto n = static_cast<std::size_t>(q.vertex_count());
  if (a.size() != n || b.size() != n) throw std::invalid_argument("ringel_form: dimension vector length mismatch");
  long long total = 0;
  for (std::size_t i = 0; i < n; ++i) total += a[i] * b[i];
  for (const auto& arr : q.arrows()) total -= a[arr.source - 1] * b[arr.target - 1];
  return total;
}

Quiver frame_quiver(const Quiver& q, Vertex marked) {
  if (!q.has_vertex(marked)) throw std::invalid_argument("frame_quiver: invalid marked vertex");
  std::vector<Arrow> arrows = q.arrows();
  Label label = "fr";
  for (int k = 1; q.has_arrow(label); ++k) label = "fr" + std::to_string(k);
  const Vertex v = q.vertex_count() + 1;
  arrows.push_back({label, v, marked, 0});
  return Quiver(v, q.principal_count(), std::move(arrows));
}

Quiver glue_acyclic(const Quiver& q, const std::vector<TreeAttachment>& trees) {
  std::vector<Arrow> arrows = q.arrows();
  int n = q.vertex_count();
  for (std::size_t r = 0; r < trees.size(); ++r) {
    const auto& t = trees[r];
    if (!t.tree.is_acyclic()) throw std::invalid_argument("glue_acyclic: attachment " + std::to_string(r + 1) + " is not acyclic");
    if (!t.tree.has_vertex(t.tree_vertex) || !q.has_vertex(t.host_vertex))
      throw std::invalid_argument("glue_acyclic: invalid attachment vertex");
    std::vector<Vertex> image(t.tree.vertex_count() + 1, 0);
    for (Vertex v = 1; v <= t.tree.vertex_count(); ++v)
      image[v] = (v == t.tree_vertex) ? t.host_vertex : ++n;
    const std::string prefix = "t" + std::to_string(r + 1) + ".";
    for (const auto& a : t.tree.arrows())
      arrows.push_back({prefix + a.label, image[a.source], image[a.target], a.weight});
  }
  return Quiver(n, q.principal_count(), std::move(arrows));
}

Quiver induced_subquiver(const Quiver& q, const std::vector<Vertex>& vertices) {
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Vertex> image(q.vertex_count() + 1, 0);
  int principal = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!q.has_vertex(sorted[i])) throw std::invalid_argument("induced_subquiver: invalid vertex");
    image[sorted[i]] = static_cast<Vertex>(i + 1);
    principal += q.is_principal(sorted[i]);
  }
  if (principal == 0) throw std::invalid_argument("induced_subquiver: no principal vertex selected");
  std::vector<Arrow> arrows;
  for (const auto& a : q.arrows())
    if (image[a.source] && image[a.target]) arrows.push_back({a.label, image[a.source], image[a.target], a.weight});
  return Quiver(static_cast<int>(sorted.size()), principal, std::move(arrows));
}

Quiver direct_sum(const Quiver& a, const Quiver& b) {
  if (a.vertex_count() != b.vertex_count() || a.principal_count() != b.principal_count())
    throw std::invalid_argument("direct_sum: vertex sets differ");
  std::vector<Arrow> arrows = a.arrows();
  arrows.insert(arrows.end(), b.arrows().begin(), b.arrows().end());
  return Quiver(a.vertex_count(), a.principal_count(), std::move(arrows));
}

std::vector<Vertex> traversed_vertices(const Quiver& q, const Word& w) {
  std::vector<Vertex> out;
  if (w.empty()) return out;
  out.push_back(q.arrow(w.back()).source);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const Arrow& a = q.arrow(*it);
    if (a.source != out.back()) throw std::invalid_argument("word '" + format_word(w) + "' is not composable");
    out.push_back(a.target);
  }
  return out;
}

bool is_cycle(const Quiver& q, const Word& w) {
  if (w.empty()) return false;
  for (const auto& l : w)
    if (!q.has_arrow(l)) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (q.arrow(w[i]).source != q.arrow(w[i + 1]).target) return false;
  return q.arrow(w.front()).target == q.arrow(w.back()).source;
}

std::vector<Word> enumerate_simple_cycles(const Quiver& q, int max_len) {
  std::set<Word> found;
  const int n = q.vertex_count();
  std::vector<std::vector<const Arrow*>> out(n + 1);
  for (const auto& a : q.arrows()) out[a.source].push_back(&a);
  std::vector<const Arrow*> trail;  // traversal order
  std::vector<bool> on_path(n + 1, false);
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex start, Vertex at) {
    for (const Arrow* a : out[at]) {
      if (a->target == start) {
        if (trail.size() + 1 >= 2) {
          Word w;
          w.push_back(a->label);
          for (auto it = trail.rbegin(); it != trail.rend(); ++it) w.push_back((*it)->label);
          found.insert(canonical_rotation(w));
        }
        continue;
      }
      if (a->target < start || on_path[a->target]) continue;
      if (static_cast<int>(trail.size()) + 2 > max_len) continue;
      on_path[a->target] = true;
      trail.push_back(a);
      dfs(start, a->target);
      trail.pop_back();
      on_path[a->target] = false;
    }
  };
  for (Vertex v = 1; v <= n; ++v) {
    on_path[v] = true;
    dfs(v, v);
    on_path[v] = false;
  }
  std::vector<Word> result(found.begin(), found.end());
  std::stable_sort(result.begin(), result.end(),
                   [](const Word& x, const Word& y) { return x.size() < y.size(); });
  return result;
}

}  // namespace qpc
