// Containers with 3 <= l <= (n-k)(k-1). A container inside the class of
// u at the last position supplies l paths that end next to a neighbor of
// v; each is then routed out of the class to v.
#include <algorithm>
#include <optional>

#include "construct.hpp"

namespace spancon {
namespace {

using detail::class_container;
using detail::class_cover;
using detail::class_path;
using detail::join;
using detail::labels_except;
using detail::union_path;
using detail::vtx;

// The path without its last vertex.
Path head_of(const Path& p) { return Path(p.begin(), p.end() - 1); }

std::vector<Label> labels_of(const Vertex& x) { return {x.labels().begin(), x.labels().end()}; }

// u and v agree at position k.
std::vector<Path> shared_position(const Arrangement& g, const Vertex& u, const Vertex& v, int l) {
  const int k = g.k();
  const Label alpha = u.at(k);
  std::vector<Path> paths = class_container(g, k, alpha, u, v, l).paths;
  Path last = paths.back();
  paths.pop_back();
  const Vertex y = last[1];
  std::vector<Label> taken = labels_of(u);
  for (Label x : y.labels()) taken.push_back(x);
  const Label beta = labels_except(g.n(), taken).front();
  Path h = union_path(g, k, labels_except(g.n(), {alpha}), u.swapped(alpha, beta), y.swapped(alpha, beta));
  paths.push_back(join(u, h, Path(last.begin() + 1, last.end())));
  return paths;
}

// u_k = alpha is not a label of v.
std::vector<Path> partial_overlap(const Arrangement& g, const Vertex& u, const Vertex& v, int l) {
  const int n = g.n();
  const int k = g.k();
  const Label alpha = u.at(k);
  const Label beta = v.at(k);
  const Vertex y = v.with(k, alpha);
  std::vector<Path> P = class_container(g, k, alpha, u, y, l).paths;

  // The shortest path comes last; the others are split by whether their
  // hub neighbor y^i carries beta.
  auto shortest = std::min_element(P.begin(), P.end(), [](const Path& a, const Path& b) {
    return a.size() != b.size() ? a.size() < b.size() : a[a.size() - 2] < b[b.size() - 2];
  });
  Path last = *shortest;
  P.erase(shortest);
  std::vector<Path> with_beta;
  std::vector<Path> without_beta;
  for (auto& p : P) (p[p.size() - 2].contains(beta) ? with_beta : without_beta).push_back(std::move(p));
  std::sort(with_beta.begin(), with_beta.end(), [&](const Path& a, const Path& b) {
    return a[a.size() - 2].position_of(beta) < b[b.size() - 2].position_of(beta);
  });
  std::sort(without_beta.begin(), without_beta.end(),
            [](const Path& a, const Path& b) { return a[a.size() - 2] < b[b.size() - 2]; });
  const int m = static_cast<int>(with_beta.size());
  std::vector<Path> order = with_beta;
  order.insert(order.end(), without_beta.begin(), without_beta.end());
  // 1-based accessors matching the path numbering.
  auto hub = [&](int i) { return order[static_cast<std::size_t>(i - 1)][order[static_cast<std::size_t>(i - 1)].size() - 2]; };
  auto pre = [&](int i) { return head_of(order[static_cast<std::size_t>(i - 1)]); };

  std::vector<Label> not_v = labels_except(n, labels_of(v));
  std::erase(not_v, alpha);

  std::vector<Path> paths;
  if (m == 0) {
    CaseScope scope("no-beta");
    std::vector<Vertex> z;
    for (int i = 1; i <= l - 2; ++i) z.push_back(hub(i).swapped(alpha, beta));
    for (int i = 1; i <= l - 3; ++i) paths.push_back(join(pre(i), z[static_cast<std::size_t>(i - 1)], v));
    Path r = class_path_avoiding(g, k, beta, std::vector<Vertex>(z.begin(), z.end() - 1), z.back(), v);
    paths.push_back(join(pre(l - 2), r));
    const Vertex yl1 = hub(l - 1);
    int pos = 1;
    while (yl1.at(pos) == y.at(pos)) ++pos;
    const Label x = yl1.at(pos);
    Path h = union_path(g, k, labels_except(n, {alpha, beta}), yl1.swapped(alpha, v.at(pos)), v.swapped(beta, x));
    paths.push_back(join(pre(l - 1), h, v));
  } else {
    CaseScope scope(m < l - 1 ? "some-beta" : "all-beta");
    const Label gamma = not_v.front();
    // For i <= m the hub neighbor carries beta at position j_i.
    auto j_of = [&](int i) { return hub(i).position_of(beta); };
    auto z_of = [&](int i) { return i <= m ? v.with(j_of(i), alpha) : hub(i).swapped(alpha, beta); };
    const int routed = m < l - 1 ? m - 1 : l - 2;  // paths with their own class v_{j_i}
    std::vector<Label> drop{alpha, beta};
    for (int i = 1; i <= routed; ++i) {
      const Label c = v.at(j_of(i));
      Path r = class_path(g, k, c, hub(i).swapped(alpha, c), z_of(i).swapped(beta, c));
      paths.push_back(join(pre(i), r, z_of(i), v));
      drop.push_back(c);
    }
    std::vector<Vertex> removed;
    if (m < l - 1) {
      Path rm = union_path(g, k, labels_except(n, drop), hub(m).swapped(alpha, v.at(j_of(m))), v.swapped(beta, gamma));
      paths.push_back(join(pre(m), rm, v));
      for (int i = m + 1; i <= l - 2; ++i) paths.push_back(join(pre(i), z_of(i), v));
      for (int i = 1; i <= l - 2; ++i) {
        if (i != m) removed.push_back(z_of(i));
      }
      Path r = class_path_avoiding(g, k, beta, removed, z_of(l - 1), v);
      paths.push_back(join(pre(l - 1), r));
    } else {
      for (int i = 1; i <= l - 2; ++i) removed.push_back(z_of(i));
      Path r = class_path_avoiding(g, k, beta, removed, z_of(l - 1), v);
      Path rl = union_path(g, k, labels_except(n, drop), hub(l - 1).swapped(alpha, v.at(j_of(l - 1))),
                           z_of(l - 1).swapped(beta, gamma));
      paths.push_back(join(pre(l - 1), rl, r));
    }
  }
  paths.push_back(join(last, v));
  return paths;
}

// k = 2, u = 12, v = 21.
std::vector<Path> same_labels_k2(const Arrangement& g, int l) {
  const int n = g.n();
  const Label a = n - 1;
  std::vector<Path> paths;
  paths.push_back(join(class_path(g, 2, 2, vtx({1, 2}), vtx({n, 2})), class_path(g, 2, 3, vtx({n, 3}), vtx({a, 3})),
                       class_path(g, 2, 1, vtx({a, 1}), vtx({2, 1}))));
  for (int i = 2; i <= l - 1; ++i) {
    const Label c = i + 2;
    paths.push_back(join(vtx({1, 2}), class_path(g, 2, c, vtx({1, c}), vtx({2, c})), vtx({2, 1})));
  }
  std::vector<Label> rest;
  for (Label c = l + 2; c <= n; ++c) rest.push_back(c);
  paths.push_back(join(vtx({1, 2}), union_path(g, 2, rest, vtx({1, l + 2}), vtx({2, n})), vtx({2, 1})));
  return paths;
}

// k >= 3, v = 12..k, u_k = 1 and u has the labels 1..k.
std::vector<Path> same_labels(const Arrangement& g, const Vertex& u, const Vertex& v, int l) {
  const int n = g.n();
  const int k = g.k();
  Vertex y = v.with(1, k).with(k, 1);
  std::vector<Path> P = class_container(g, k, 1, u, y, l).paths;
  auto hub = [](const Path& p) { return p[p.size() - 2]; };
  auto changed = [&](const Path& p) {
    const Vertex h = hub(p);
    int i = 1;
    while (h.at(i) == y.at(i)) ++i;
    return i;
  };

  std::vector<Path> first;  // hub differs from y at position 1
  std::vector<Path> others;
  for (auto& p : P) (changed(p) == 1 ? first : others).push_back(std::move(p));
  auto by_hub = [&](const Path& a, const Path& b) {
    int ca = changed(a);
    int cb = changed(b);
    return ca != cb ? ca < cb : hub(a) < hub(b);
  };
  std::sort(first.begin(), first.end(), by_hub);
  std::sort(others.begin(), others.end(), by_hub);

  // Spokes through the classes 2..k-1 that share a position with v.
  auto cover_classes = [&](const std::vector<Path>& spokes, std::vector<Path>& out, std::vector<Vertex>& zs) {
    std::vector<Label> used;
    for (int i = 2; i <= k - 1; ++i) {
      std::vector<Vertex> A;
      std::vector<Vertex> B;
      std::map<Vertex, Path> heads;
      std::map<Vertex, Vertex> exit_to_z;
      for (const auto& p : spokes) {
        if (changed(p) != i) continue;
        const Vertex h = hub(p);
        const Vertex z = v.with(i, h.at(i));
        A.push_back(h.swapped(1, i));
        B.push_back(z.swapped(k, i));
        heads.emplace(A.back(), head_of(p));
        exit_to_z.emplace(B.back(), z);
        zs.push_back(z);
      }
      if (A.empty()) continue;
      used.push_back(i);
      for (const auto& c : class_cover(g, k, i, i, A, B)) {
        out.push_back(join(heads.at(c.front()), c, exit_to_z.at(c.back())));
      }
    }
    return used;
  };

  std::vector<Path> paths;
  if (first.size() <= 2) {
    CaseScope scope("few-first");
    std::vector<Path> order = others;
    order.insert(order.end(), first.begin(), first.end());
    std::vector<Path> spokes(order.begin(), order.end() - 2);
    const Path& p_l1 = order[order.size() - 2];
    const Path& p_l = order.back();
    std::vector<Path> covered;
    std::vector<Vertex> zs;
    std::vector<Label> used = cover_classes(spokes, covered, zs);
    // The last z (largest class, last hub) continues through class k.
    const Vertex z_last = zs.back();
    for (std::size_t s = 0; s < covered.size(); ++s) {
      Path& c = covered[s];
      if (c.back() == z_last) {
        c.pop_back();
        c = join(c, class_path_avoiding(g, k, k, std::vector<Vertex>(zs.begin(), zs.end() - 1), z_last, v));
      } else {
        c.push_back(v);
      }
      paths.push_back(std::move(c));
    }
    const Vertex y_l1 = hub(p_l1);
    std::vector<Label> taken = labels_of(y);
    for (Label x : y_l1.labels()) taken.push_back(x);
    const Label a = labels_except(n, taken).front();
    std::vector<Label> low;
    for (Label x = 1; x <= k; ++x) low.push_back(x);
    low.push_back(a);
    const Label b = labels_except(n, low).front();
    paths.push_back(join(head_of(p_l1), class_path(g, k, a, y_l1.swapped(1, a), v.swapped(k, a)), v));
    std::vector<Label> drop = used;
    drop.push_back(1);
    drop.push_back(k);
    drop.push_back(a);
    paths.push_back(join(p_l, union_path(g, k, labels_except(n, drop), y.swapped(1, b), v.swapped(k, b)), v));
    return paths;
  }

  CaseScope scope("many-first");
  // f_1 < f_2 < ... are the position-1 labels of the hubs in `first`.
  const int n1 = static_cast<int>(first.size()) - 2;
  std::vector<Label> f;
  for (const auto& p : first) f.push_back(hub(p).at(1));
  auto fl = [&](int i) { return f[static_cast<std::size_t>(i - 1)]; };

  std::vector<Path> covered;
  std::vector<Vertex> zs;
  std::vector<Label> used = cover_classes(others, covered, zs);
  for (auto& c : covered) paths.push_back(join(c, v));

  for (int t = 1; t <= n1; ++t) {
    const Path& p = first[static_cast<std::size_t>(t - 1)];
    const Label c = fl(t + 1);
    paths.push_back(join(head_of(p), class_path(g, k, c, hub(p).swapped(1, c), v.swapped(k, c)), v));
  }
  const Path& p_l1 = first[static_cast<std::size_t>(n1)];
  const Path& p_l = first[static_cast<std::size_t>(n1 + 1)];
  const Label c = fl(n1 + 2);
  paths.push_back(join(head_of(p_l1), class_path(g, k, c, hub(p_l1).swapped(1, c), v.swapped(k, c)), v));

  const Vertex z11 = v.with(1, fl(n1 + 1));
  Path r = class_path_avoiding(g, k, k, zs, z11, v);
  std::vector<Label> drop = used;
  drop.push_back(1);
  drop.push_back(k);
  for (int i = 2; i <= n1 + 2; ++i) drop.push_back(fl(i));
  Path rl = union_path(g, k, labels_except(n, drop), y.swapped(1, fl(1)), z11.swapped(k, fl(1)));
  paths.push_back(join(p_l, rl, r));
  return paths;
}

}  // namespace

Container container_general(const ContainerRequest& req) {
  const Arrangement& g = req.g;
  const Vertex& u = req.u;
  const Vertex& v = req.v;
  const int n = g.n();
  const int k = g.k();
  g.require_vertex(u);
  g.require_vertex(v);
  if (u == v) throw InputError("endpoints must differ");
  if (req.l < 3 || req.l > (n - k) * (k - 1)) throw InputError("l out of range for the general construction");
  if (n == 4) return container(req);
  CaseScope scope("general");
  const int l = req.l;

  int p = 0;
  for (int i = k; i >= 1 && p == 0; --i) {
    if (u.at(i) == v.at(i)) p = i;
  }
  auto move_last = [&](int q) {
    std::vector<int> order;
    for (int i = 1; i <= k; ++i) {
      if (i != q) order.push_back(i);
    }
    order.push_back(q);
    return detail::reorder_positions(n, order);
  };
  if (p != 0) {
    CaseScope c("shared-position");
    return detail::via(g, move_last(p), u, v, [&](const Vertex& a, const Vertex& b) {
      return shared_position(g, a, b, l);
    });
  }
  for (int i = k; i >= 1 && p == 0; --i) {
    if (!v.contains(u.at(i))) p = i;
  }
  if (p != 0) {
    CaseScope c("partial-overlap");
    return detail::via(g, move_last(p), u, v, [&](const Vertex& a, const Vertex& b) {
      return partial_overlap(g, a, b, l);
    });
  }
  if (k == 2) {
    CaseScope c("same-labels-pair");
    Automorphism phi = Automorphism::of_labels(k, extend_label_map(n, {{u.at(1), 1}, {u.at(2), 2}}));
    return detail::via(g, phi, u, v, [&](const Vertex&, const Vertex&) { return same_labels_k2(g, l); });
  }
  CaseScope c("same-labels");
  // Put the position of u_k in v first, keep k last; then relabel v to 1..k.
  const int q = v.position_of(u.at(k));
  std::vector<int> order{q};
  for (int i = 1; i <= k; ++i) {
    if (i != q) order.push_back(i);
  }
  Automorphism pos = detail::reorder_positions(n, order);
  const Vertex pv = pos.apply(v);
  std::map<Label, Label> fixed;
  for (int i = 1; i <= k; ++i) fixed.emplace(pv.at(i), i);
  Automorphism phi = pos.then(Automorphism::of_labels(k, extend_label_map(n, fixed)));
  return detail::via(g, phi, u, v, [&](const Vertex& a, const Vertex& b) { return same_labels(g, a, b, l); });
}

}  // namespace spancon
