// Containers with (n-k)(k-1) < l <= k(n-k). One class at the last position
// carries a full-degree container from the recursion; the remaining paths
// run through the other classes.
#include <algorithm>
#include <functional>
#include <optional>

#include "construct.hpp"

namespace spancon {
namespace {

using detail::class_container;
using detail::class_cover;
using detail::class_path;
using detail::join;
using detail::labels_except;
using detail::Spokes;
using detail::union_path;

std::vector<Label> minus(std::vector<Label> from, const std::vector<Label>& drop) {
  std::erase_if(from, [&](Label x) { return std::find(drop.begin(), drop.end(), x) != drop.end(); });
  return from;
}

std::vector<Label> set_of(const Vertex& x) { return {x.labels().begin(), x.labels().end()}; }

std::vector<Label> sorted(std::vector<Label> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// u and v agree at position k.
std::vector<Path> shared_position(const Arrangement& g, const Vertex& u, const Vertex& v, int l) {
  const int n = g.n();
  const int k = g.k();
  const int base = (n - k) * (k - 1);
  const Label alpha = u.at(k);
  std::vector<Label> U = sorted(set_of(u));
  std::vector<Label> V = sorted(set_of(v));
  std::vector<Label> u_only = minus(U, V);
  std::vector<Label> v_only = minus(V, U);
  std::vector<Label> W = labels_except(n, minus(U, {}));
  W = minus(W, V);

  std::vector<Path> paths = class_container(g, k, alpha, u, v, base).paths;
  const int extra = l - base;
  auto through = [&](Label w) {
    return join(u, class_path(g, k, w, u.swapped(alpha, w), v.swapped(alpha, w)), v);
  };
  if (extra <= static_cast<int>(W.size())) {
    CaseScope scope("spare-labels");
    for (int i = 0; i + 1 < extra; ++i) paths.push_back(through(W[static_cast<std::size_t>(i)]));
    Label w = W[static_cast<std::size_t>(extra - 1)];
    std::vector<Label> I = minus(labels_except(n, {alpha}), std::vector<Label>(W.begin(), W.begin() + (extra - 1)));
    paths.push_back(join(u, union_path(g, k, I, u.swapped(alpha, w), v.swapped(alpha, w)), v));
    return paths;
  }
  CaseScope scope("crossing-labels");
  for (Label w : W) paths.push_back(through(w));
  const int rest = extra - static_cast<int>(W.size());
  for (int j = 0; j + 1 < rest; ++j) {
    Label a = v_only[static_cast<std::size_t>(j)];
    Label b = u_only[static_cast<std::size_t>(j)];
    paths.push_back(join(u, union_path(g, k, {a, b}, u.swapped(alpha, a), v.swapped(alpha, b)), v));
  }
  std::vector<Label> drop = W;
  drop.push_back(alpha);
  for (int j = 0; j + 1 < rest; ++j) {
    drop.push_back(v_only[static_cast<std::size_t>(j)]);
    drop.push_back(u_only[static_cast<std::size_t>(j)]);
  }
  Label a = v_only[static_cast<std::size_t>(rest - 1)];
  Label b = u_only[static_cast<std::size_t>(rest - 1)];
  paths.push_back(join(u, union_path(g, k, labels_except(n, drop), u.swapped(alpha, a), v.swapped(alpha, b)), v));
  return paths;
}

// Common frame for the two cases where u and v share no position but
// v_k = beta is a label of u. In canonical form
//   v = (x_1..x_t, v'_{t+1}..v'_{k-2}, c, beta),  u_k = alpha,
// where c = alpha when alpha is a label of v and c = v'_{k-1} otherwise.
// y = v with (c, beta) replaced by (gamma, alpha), z = y with alpha -> beta.
// P is a full-degree container from u to y in class alpha, Q one from z to
// v in class beta; y^{ij} and z^{ij} are their hub neighbors.
struct HubFrame {
  const Arrangement& g;
  int n, k, base;
  Vertex u, v, y, z;
  Label alpha, beta, gamma;
  std::vector<Label> S;  // labels outside y and beta
  Spokes P, Q;

  HubFrame(const Arrangement& graph, const Vertex& u_, const Vertex& v_, Label gamma_)
      : g(graph), n(graph.n()), k(graph.k()), base((graph.n() - graph.k()) * (graph.k() - 1)),
        u(u_), v(v_), alpha(u_.at(graph.k())), beta(v_.at(graph.k())), gamma(gamma_) {
    y = v.with(k - 1, gamma).with(k, alpha);
    z = y.with(k, beta);
    std::vector<Label> drop = set_of(y);
    drop.push_back(beta);
    S = labels_except(n, drop);
    P = Spokes::into(class_container(g, k, alpha, u, y, base));
    Q = Spokes::out_of(class_container(g, k, beta, z, v, base));
  }

  // i in 1..k-1, j in 1..n-k.
  Vertex ynb(int i, int j) const {
    Label to = j <= n - k - 1 ? S[static_cast<std::size_t>(j - 1)] : beta;
    return y.with(i, to);
  }
  Vertex znb(int i, int j) const {
    Label to = j <= n - k - 1 ? S[static_cast<std::size_t>(j - 1)] : alpha;
    return z.with(i, to);
  }
  const Path& pre(int i, int j) const { return P.at(ynb(i, j)); }
  const Path& suf(int i, int j) const { return Q.at(znb(i, j)); }

  // The default routing of the (i,j) spoke pair.
  Path spoke(int i, int j) const {
    if (j <= n - k - 1) return join(pre(i, j), suf(i, j));
    if (i == k - 1) return join(pre(i, j), y, z, suf(i, j));
    Label c = y.at(i);
    Path r = class_path(g, k, c, ynb(i, j).swapped(alpha, c), znb(i, j).swapped(beta, c));
    return join(pre(i, j), r, suf(i, j));
  }
};

// Spoke pairs (i, n-k) listed in `special` are routed by the caller.
std::vector<Path> default_spokes(const HubFrame& f, const std::vector<int>& special) {
  std::vector<Path> paths;
  for (int i = 1; i <= f.k - 1; ++i) {
    for (int j = 1; j <= f.n - f.k; ++j) {
      if (j == f.n - f.k && std::find(special.begin(), special.end(), i) != special.end()) continue;
      paths.push_back(f.spoke(i, j));
    }
  }
  return paths;
}

// Canonical: v = (x_1..x_t, v'.., alpha, beta), u_k = alpha, beta in U.
std::vector<Path> crossed(const Arrangement& g, const Vertex& u, const Vertex& v, int l) {
  const int n = g.n();
  const int k = g.k();
  const int base = (n - k) * (k - 1);
  const Label alpha = u.at(k);
  const Label beta = v.at(k);
  int t = 0;
  while (t < k - 2 && u.contains(v.at(t + 1))) ++t;
  std::vector<Label> u_only = minus(sorted(set_of(u)), set_of(v));
  std::vector<Label> W = minus(labels_except(n, set_of(u)), set_of(v));
  const int extra = l - base;

  if (extra <= static_cast<int>(W.size())) {
    CaseScope scope("spare-labels");
    std::vector<Label> outside_v = labels_except(n, set_of(v));
    HubFrame f(g, u, v, outside_v.front());
    std::vector<Path> paths = default_spokes(f, {});
    for (int i = 0; i + 1 < extra; ++i) {
      Label w = W[static_cast<std::size_t>(i)];
      paths.push_back(join(u, class_path(g, k, w, u.swapped(alpha, w), v.swapped(beta, w)), v));
    }
    Label w = W[static_cast<std::size_t>(extra - 1)];
    std::vector<Label> I = minus(labels_except(n, set_of(v)), {alpha});
    I = minus(I, std::vector<Label>(W.begin(), W.begin() + (extra - 1)));
    paths.push_back(join(u, union_path(g, k, I, u.swapped(alpha, w), v.swapped(beta, w)), v));
    return paths;
  }

  CaseScope scope("crossing-labels");
  const int rest = extra - static_cast<int>(W.size());
  // gamma = u'_{k-2} closes the list of labels only in u.
  Label gamma = u_only.front();
  std::vector<Label> uo(u_only.begin() + 1, u_only.end());
  uo.push_back(gamma);
  HubFrame f(g, u, v, gamma);
  std::vector<int> special;
  for (int j = 1; j <= rest - 1; ++j) special.push_back(t + j);
  special.push_back(k - 2);
  special.push_back(k - 1);
  std::vector<Path> paths = default_spokes(f, special);
  for (Label w : W) paths.push_back(join(u, class_path(g, k, w, u.swapped(alpha, w), v.swapped(beta, w)), v));
  for (int j = 1; j <= rest - 1; ++j) {
    CaseScope step("step2");
    Label a = uo[static_cast<std::size_t>(j - 1)];
    Label b = v.at(t + j);
    paths.push_back(join(f.pre(t + j, n - k),
                         class_path(g, k, a, f.ynb(t + j, n - k).swapped(alpha, a), v.swapped(beta, a)), v));
    paths.push_back(join(u, class_path(g, k, b, u.swapped(alpha, b), f.znb(t + j, n - k).swapped(beta, b)),
                         f.suf(t + j, n - k)));
  }
  CaseScope step("step3");
  const Label c = v.at(k - 2);
  paths.push_back(join(u, class_path(g, k, c, u.swapped(alpha, c), f.znb(k - 2, n - k).swapped(beta, c)),
                       f.suf(k - 2, n - k)));
  std::vector<Label> I(uo.begin() + (rest - 1), uo.end());
  paths.push_back(join(f.pre(k - 1, n - k), union_path(g, k, I, f.ynb(k - 1, n - k).swapped(alpha, gamma), v.swapped(beta, gamma)), v));
  paths.push_back(join(f.pre(k - 2, n - k), f.y, f.z, f.suf(k - 1, n - k)));
  return paths;
}

// Canonical: v = (x_1..x_t, v'_{t+1}..v'_{k-1}, beta), u_k = alpha not in V,
// beta in U.
std::vector<Path> one_sided(const Arrangement& g, const Vertex& u, const Vertex& v, int l) {
  const int n = g.n();
  const int k = g.k();
  const int base = (n - k) * (k - 1);
  const Label alpha = u.at(k);
  const Label beta = v.at(k);
  int t = 0;
  while (t < k - 1 && u.contains(v.at(t + 1))) ++t;
  std::vector<Label> u_rest = minus(minus(sorted(set_of(u)), set_of(v)), {alpha});
  std::vector<Label> W = minus(labels_except(n, set_of(u)), set_of(v));
  const int extra = l - base;
  const Label last_v = v.at(k - 1);

  if (extra <= static_cast<int>(W.size()) + 1) {
    CaseScope scope("spare-labels");
    std::vector<Label> outside = minus(labels_except(n, set_of(v)), {alpha});
    HubFrame f(g, u, v, outside.front());
    std::vector<Path> paths = default_spokes(f, {k - 1});
    for (int i = 0; i + 1 < extra; ++i) {
      Label w = W[static_cast<std::size_t>(i)];
      paths.push_back(join(u, class_path(g, k, w, u.swapped(alpha, w), v.swapped(beta, w)), v));
    }
    std::vector<Label> I(W.begin() + (extra - 1), W.end());
    I.insert(I.end(), u_rest.begin(), u_rest.end());
    I.push_back(last_v);
    paths.push_back(join(u, union_path(g, k, I, u.swapped(alpha, last_v), f.znb(k - 1, n - k).swapped(beta, last_v)),
                         f.suf(k - 1, n - k)));
    paths.push_back(join(f.pre(k - 1, n - k), f.y, f.z, v));
    return paths;
  }

  CaseScope scope("crossing-labels");
  const int rest = extra - static_cast<int>(W.size()) - 1;
  Label gamma = u_rest.front();
  std::vector<Label> uo(u_rest.begin() + 1, u_rest.end());
  uo.push_back(gamma);
  HubFrame f(g, u, v, gamma);
  std::vector<int> special;
  for (int j = 1; j <= rest - 1; ++j) special.push_back(t + j);
  special.push_back(k - 2);
  special.push_back(k - 1);
  std::vector<Path> paths = default_spokes(f, special);
  for (Label w : W) paths.push_back(join(u, class_path(g, k, w, u.swapped(alpha, w), v.swapped(beta, w)), v));
  for (int j = 1; j <= rest - 1; ++j) {
    CaseScope step("step2");
    Label a = uo[static_cast<std::size_t>(j - 1)];
    Label b = v.at(t + j);
    paths.push_back(join(f.pre(t + j, n - k),
                         class_path(g, k, a, f.ynb(t + j, n - k).swapped(alpha, a), v.swapped(beta, a)), v));
    paths.push_back(join(u, class_path(g, k, b, u.swapped(alpha, b), f.znb(t + j, n - k).swapped(beta, b)),
                         f.suf(t + j, n - k)));
  }
  CaseScope step("step3");
  const Label c = v.at(k - 2);
  paths.push_back(join(u, class_path(g, k, c, u.swapped(alpha, c), f.znb(k - 2, n - k).swapped(beta, c)),
                       f.suf(k - 2, n - k)));
  std::vector<Label> I(uo.begin() + (rest - 1), uo.end() - 1);
  I.push_back(last_v);
  paths.push_back(join(u, union_path(g, k, I, u.swapped(alpha, last_v), f.znb(k - 1, n - k).swapped(beta, last_v)),
                       f.suf(k - 1, n - k)));
  paths.push_back(join(f.pre(k - 2, n - k), f.y, f.z, v));
  paths.push_back(join(f.pre(k - 1, n - k),
                       class_path(g, k, gamma, f.ynb(k - 1, n - k).swapped(alpha, gamma), v.swapped(beta, gamma)), v));
  return paths;
}

// k = 2, u = 12, v = 34.
std::vector<Path> disjoint_k2(const Arrangement& g, int l) {
  using detail::vtx;
  const int n = g.n();
  if (n == 5) {
    return a52_disjoint_tables()[static_cast<std::size_t>(l - 4)].paths;
  }
  const Vertex u = vtx({1, 2});
  const Vertex v = vtx({3, 4});
  std::vector<Path> paths{{u, vtx({3, 2}), v}, {u, vtx({1, 4}), v}};
  if (l == n - 1) {
    CaseScope scope("one-extra");
    paths.push_back(join(u, vtx({4, 2}), union_path(g, 2, labels_except(n, {2, 4}), vtx({4, 1}), vtx({2, 1})),
                         vtx({2, 4}), v));
    for (Label i = 5; i <= n; ++i) paths.push_back({u, vtx({i, 2}), vtx({i, 4}), v});
    return paths;
  }
  CaseScope scope(l == n ? "two-extra" : "many-extra");
  paths.push_back(join(u, vtx({4, 2}), class_path(g, 2, 1, vtx({4, 1}), vtx({3, 1})), v));
  const int top = l - n + 3;  // classes 5..top get their own path
  if (l == n) {
    paths.push_back(join(u, union_path(g, 2, labels_except(n, {1, 2, 4}), vtx({1, 3}), vtx({2, 3})),
                         vtx({2, 4}), v));
  } else {
    paths.push_back(join(u, class_path(g, 2, 3, vtx({1, 3}), vtx({2, 3})), vtx({2, 4}), v));
  }
  for (Label i = 5; i <= n; ++i) paths.push_back({u, vtx({i, 2}), vtx({i, 4}), v});
  if (l > n) {
    for (Label j = 5; j <= top; ++j) paths.push_back(join(u, class_path(g, 2, j, vtx({1, j}), vtx({3, j})), v));
    std::vector<Label> drop;
    for (Label x = 1; x <= top; ++x) drop.push_back(x);
    Label c = top + 1;
    paths.push_back(join(u, union_path(g, 2, labels_except(n, drop), vtx({1, c}), vtx({3, c})), v));
  }
  return paths;
}

// Joins the paths of a class cover to the prefixes and suffixes keyed by
// their first and last vertices. The cover may pair its ends freely.
class CoverJoin {
 public:
  void add(const Vertex& a, Path head, const Vertex& b, Path tail) {
    A_.push_back(a);
    heads_.emplace(a, std::move(head));
    B_.push_back(b);
    tails_.emplace(b, std::move(tail));
  }

  void run(const Arrangement& g, Label cls, int t, std::vector<Path>& out) const {
    for (const auto& p : class_cover(g, g.k(), cls, t, A_, B_)) {
      out.push_back(join(heads_.at(p.front()), p, tails_.at(p.back())));
    }
  }

 private:
  std::vector<Vertex> A_;
  std::vector<Vertex> B_;
  std::map<Vertex, Path> heads_;
  std::map<Vertex, Path> tails_;
};

// k >= 3, u and v share no label.
std::vector<Path> disjoint_general(const Arrangement& g, const Vertex& u, const Vertex& v, int l) {
  const int n = g.n();
  const int k = g.k();
  const int base = (n - k) * (k - 1);
  const Label uk = u.at(k);
  const Label vk = v.at(k);
  std::vector<Label> W = minus(labels_except(n, set_of(u)), set_of(v));
  const int w_count = static_cast<int>(W.size());

  Vertex y = v.with(k, uk);
  Vertex z = u.with(k, vk);
  Spokes P = Spokes::into(class_container(g, k, uk, u, y, base));
  Spokes Q = Spokes::out_of(class_container(g, k, vk, z, v, base));
  auto y_label = [&](int j) { return j <= k - 1 ? u.at(j) : j == k ? vk : W[static_cast<std::size_t>(j - k - 1)]; };
  auto z_label = [&](int j) { return j <= k - 1 ? v.at(j) : j == k ? uk : W[static_cast<std::size_t>(j - k - 1)]; };
  auto ynb = [&](int i, int j) { return y.with(i, y_label(j)); };
  auto znb = [&](int i, int j) { return z.with(i, z_label(j)); };
  auto pre = [&](int i, int j) -> const Path& { return P.at(ynb(i, j)); };
  auto suf = [&](int i, int j) -> const Path& { return Q.at(znb(i, j)); };
  // Entry of spoke (i,j) into class v_i, and the matching exit.
  auto ya = [&](int i, int j) { return ynb(i, j).swapped(uk, v.at(i)); };
  auto zb = [&](int i, int j) { return znb(i, j).swapped(vk, v.at(i)); };

  enum class Range { kBase, kSpare, kCrossing } range;
  int lp = 0;  // crossing range: classes v_2..v_lp take an entry straight from u
  if (l == base + 1) {
    range = Range::kBase;
  } else if (l <= base + 1 + w_count) {
    range = Range::kSpare;
  } else {
    range = Range::kCrossing;
    lp = l - base - w_count - 1;
  }
  CaseScope scope(range == Range::kBase ? "base" : range == Range::kSpare ? "spare-labels" : "crossing-labels");

  std::vector<Path> paths;
  paths.push_back(join(pre(1, 1), y, v));
  paths.push_back(join(u, z, suf(k - 1, k - 1)));

  // Classes v_2..v_{k-1}; the exit of spoke (i,i) is borrowed from (i-1,i-1).
  for (int i = 2; i <= k - 1; ++i) {
    const bool from_u = range == Range::kCrossing && i <= lp;
    CoverJoin cover;
    for (int j = 1; j <= n - k; ++j) {
      if (j != i) {
        cover.add(ya(i, j), pre(i, j), zb(i, j), suf(i, j));
      } else if (from_u) {
        cover.add(u.swapped(uk, v.at(i)), Path{u}, znb(i - 1, i - 1).swapped(vk, v.at(i)), suf(i - 1, i - 1));
      } else {
        cover.add(ya(i, i), pre(i, i), znb(i - 1, i - 1).swapped(vk, v.at(i)), suf(i - 1, i - 1));
      }
    }
    cover.run(g, v.at(i), i, paths);
    if (from_u) {
      CaseScope step("step3");
      Label c = u.at(i - 1);
      paths.push_back(join(pre(i, i), class_path(g, k, c, ynb(i, i).swapped(uk, c), v.swapped(vk, c)), v));
    }
  }

  // Class v_1.
  CoverJoin first;
  for (int j = 2; j <= n - k; ++j) {
    if (range == Range::kBase && j == k) continue;
    first.add(ya(1, j), pre(1, j), zb(1, j), suf(1, j));
  }
  if (range == Range::kCrossing) {
    CaseScope step("step2");
    // x1 lies in class v_1 with u_1 first and lacks u_{k-1}.
    const Label avoid = u.at(k - 1);
    const Vertex from_u = u.swapped(uk, v.at(1));
    std::optional<Vertex> x1;
    SubgraphView(g).pinned(k, {v.at(1)}).pinned(1, {u.at(1)}).for_each_vertex([&](const Vertex& x) {
      if (!x1 && x != from_u && !x.contains(avoid)) x1 = x;
    });
    if (!x1) throw ConstructionError("no free vertex in class " + std::to_string(v.at(1)));
    std::vector<Label> I;
    for (int i = std::max(lp, 1); i <= k - 1; ++i) I.push_back(u.at(i));
    Path r = union_path(g, k, I, x1->swapped(v.at(1), avoid), v.swapped(vk, avoid));
    first.add(from_u, Path{u}, *x1, join(r, v));
  }
  {
    CaseScope step("step1");
    first.run(g, v.at(1), 1, paths);
  }

  std::vector<Label> drop = set_of(v);
  drop.push_back(uk);
  if (range == Range::kBase) {
    paths.push_back(join(pre(1, k),
                         union_path(g, k, labels_except(n, drop), ynb(1, k).swapped(uk, u.at(1)),
                                    znb(1, k).swapped(vk, u.at(1))),
                         suf(1, k)));
  } else if (range == Range::kSpare) {
    const int r = l - base - 1;
    for (int i = 0; i + 1 < r; ++i) {
      Label w = W[static_cast<std::size_t>(i)];
      paths.push_back(join(u, class_path(g, k, w, u.swapped(uk, w), v.swapped(vk, w)), v));
      drop.push_back(w);
    }
    Label w = W[static_cast<std::size_t>(r - 1)];
    paths.push_back(join(u, union_path(g, k, labels_except(n, drop), u.swapped(uk, w), v.swapped(vk, w)), v));
  } else {
    for (Label w : W) paths.push_back(join(u, class_path(g, k, w, u.swapped(uk, w), v.swapped(vk, w)), v));
  }
  return paths;
}

int last_index_where(int k, const std::function<bool(int)>& pred) {
  for (int i = k; i >= 1; --i) {
    if (pred(i)) return i;
  }
  return 0;
}

}  // namespace

Container container_high(const ContainerRequest& req) {
  const Arrangement& g = req.g;
  const Vertex& u = req.u;
  const Vertex& v = req.v;
  const int n = g.n();
  const int k = g.k();
  g.require_vertex(u);
  g.require_vertex(v);
  if (u == v) throw InputError("endpoints must differ");
  const int base = (n - k) * (k - 1);
  if (req.l <= base || req.l > g.degree()) throw InputError("l out of range for the high construction");
  if (k == 1 || n == 4) return container(req);
  if (n - k < 2) throw UnsupportedFamily("A(n,n-1) has no spanning containers");
  CaseScope scope("high");
  const int l = req.l;

  auto swap_to_last = [&](int p) {
    std::vector<int> order;
    for (int i = 1; i <= k; ++i) {
      if (i != p) order.push_back(i);
    }
    order.push_back(p);
    return detail::reorder_positions(n, order);
  };

  int p = last_index_where(k, [&](int i) { return u.at(i) == v.at(i); });
  if (p != 0) {
    CaseScope c("shared-position");
    return detail::via(g, swap_to_last(p), u, v, [&](const Vertex& a, const Vertex& b) {
      return shared_position(g, a, b, l);
    });
  }

  p = last_index_where(k, [&](int i) { return v.contains(u.at(i)) && u.contains(v.at(i)); });
  if (p != 0) {
    CaseScope c("crossed-position");
    // Position of u_p in v, then the x labels (in u), then the v' labels.
    const int g_pos = v.position_of(u.at(p));
    std::vector<int> order;
    for (int i = 1; i <= k; ++i) {
      if (i != p && i != g_pos && u.contains(v.at(i))) order.push_back(i);
    }
    for (int i = 1; i <= k; ++i) {
      if (i != p && i != g_pos && !u.contains(v.at(i))) order.push_back(i);
    }
    order.push_back(g_pos);
    order.push_back(p);
    return detail::via(g, detail::reorder_positions(n, order), u, v,
                       [&](const Vertex& a, const Vertex& b) { return crossed(g, a, b, l); });
  }

  auto one_sided_order = [&](const Vertex& a, const Vertex& b, int q) {
    std::vector<int> order;
    for (int i = 1; i <= k; ++i) {
      if (i != q && a.contains(b.at(i))) order.push_back(i);
    }
    for (int i = 1; i <= k; ++i) {
      if (i != q && !a.contains(b.at(i))) order.push_back(i);
    }
    order.push_back(q);
    return detail::reorder_positions(n, order);
  };
  p = last_index_where(k, [&](int i) { return !v.contains(u.at(i)) && u.contains(v.at(i)); });
  if (p != 0) {
    CaseScope c("one-sided");
    return detail::via(g, one_sided_order(u, v, p), u, v,
                       [&](const Vertex& a, const Vertex& b) { return one_sided(g, a, b, l); });
  }
  // No label of u sits opposite a label of v in either direction.
  if (k == 2) {
    CaseScope c("disjoint-pair");
    std::map<Label, Label> fixed{{u.at(1), 1}, {u.at(2), 2}};
    if (!fixed.emplace(v.at(1), 3).second || !fixed.emplace(v.at(2), 4).second) {
      throw ConstructionError("pair is not label-disjoint");
    }
    Automorphism phi = Automorphism::of_labels(k, extend_label_map(n, fixed));
    return detail::via(g, phi, u, v, [&](const Vertex&, const Vertex&) { return disjoint_k2(g, l); });
  }
  CaseScope c("disjoint");
  return detail::via(g, Automorphism::identity(n, k), u, v,
                     [&](const Vertex& a, const Vertex& b) { return disjoint_general(g, a, b, l); });
}

}  // namespace spancon
