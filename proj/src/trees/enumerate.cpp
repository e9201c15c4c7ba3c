#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <thread>
#include <tuple>

#include "qadm/error.hpp"
#include "qadm/trees.hpp"

namespace qadm {

namespace {

// A stable subtree hanging off a parent component by one edge.
struct Subtree {
  std::vector<MarkedPoint> points;
  std::vector<int> children;
  int degree = 0;
  bool chi = false;
  std::string cert;
};

// Local marking data of one component before children are attached.
struct LocalChoice {
  std::vector<MarkedPoint> points;
  int child_degree = 0;
  bool child_chi = false;
  Rational weight;  // sum of point weights
};

bool point_less(const MarkedPoint& a, const MarkedPoint& b) {
  return std::make_tuple(!a.tau, a.mult, a.chi) < std::make_tuple(!b.tau, b.mult, b.chi);
}

std::string point_key(const MarkedPoint& p) {
  if (p.tau) return "t";
  return std::to_string(p.mult) + (p.chi ? "c" : "");
}

void partitions(int total, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(total, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(total - p, p, cur, out);
    cur.pop_back();
  }
}

class Enumerator {
 public:
  Enumerator(const WeightVector& w, int max_mult) : w_(w), max_mult_(max_mult) {}

  // Every way to place branch points (and chi, when wanted) on one component
  // whose far side carries `degree` and `chi`.
  std::vector<LocalChoice> local_choices(int degree, bool chi, bool root) const {
    std::vector<LocalChoice> out;
    for (int d0 = 0; d0 <= degree; ++d0) {
      std::vector<std::vector<int>> parts;
      std::vector<int> cur;
      partitions(d0, max_mult_, cur, parts);
      for (const auto& part : parts) {
        std::vector<MarkedPoint> base;
        if (root) base.push_back({0, true, false});
        for (int m : part) base.push_back({m, false, false});
        auto add = [&](std::vector<MarkedPoint> pts, bool child_chi) {
          LocalChoice c;
          c.weight = Rational(0);
          for (const auto& p : pts) {
            Rational pw = point_weight(p, w_);
            if (pw > Rational(1)) return;
            c.weight += pw;
          }
          std::sort(pts.begin(), pts.end(), point_less);
          c.points = std::move(pts);
          c.child_degree = degree - d0;
          c.child_chi = child_chi;
          out.push_back(std::move(c));
        };
        if (!chi) {
          add(base, false);
          continue;
        }
        // chi standalone, on a part of each distinct size, or further out.
        auto standalone = base;
        standalone.push_back({0, false, true});
        add(standalone, false);
        std::set<int> seen;
        for (std::size_t i = 0; i < base.size(); ++i) {
          if (base[i].tau || !seen.insert(base[i].mult).second) continue;
          auto on_part = base;
          on_part[i].chi = true;
          add(on_part, false);
        }
        add(base, true);
      }
    }
    return out;
  }

  void build(int max_degree) {
    for (int d = 1; d <= max_degree; ++d) {
      build_key(d, false);
      if (w_.pointed()) build_key(d, true);
    }
  }

  // Child multisets with total degree `degree` and exactly `chi` chi-children.
  void children_sets(int degree, bool chi, const std::function<void(const std::vector<int>&)>& emit) const {
    std::vector<int> cand;
    for (int e = 1; e <= degree; ++e) {
      for (bool h : {false, true}) {
        auto it = by_key_.find({e, h});
        if (it == by_key_.end()) continue;
        if (h && !chi) continue;
        cand.insert(cand.end(), it->second.begin(), it->second.end());
      }
    }
    std::vector<int> cur;
    std::function<void(std::size_t, int, bool)> rec = [&](std::size_t i, int rem, bool need_chi) {
      if (rem == 0) {
        if (!need_chi) emit(cur);
        return;
      }
      for (std::size_t j = i; j < cand.size(); ++j) {
        const Subtree& s = all_[static_cast<std::size_t>(cand[j])];
        if (s.degree > rem) continue;
        if (s.chi && !need_chi) continue;
        cur.push_back(cand[j]);
        // A chi subtree is used at most once, so move past it.
        rec(s.chi ? j + 1 : j, rem - s.degree, need_chi && !s.chi);
        cur.pop_back();
      }
    };
    rec(0, degree, chi);
  }

  std::string cert_of(const std::vector<MarkedPoint>& pts, const std::vector<int>& children) const {
    std::vector<std::string> kids;
    for (int c : children) kids.push_back(all_[static_cast<std::size_t>(c)].cert);
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + point_key(pts[i]);
    s += "|";
    for (const auto& k : kids) s += k;
    return s + ")";
  }

  MarkedTree realize(const std::vector<MarkedPoint>& pts, const std::vector<int>& children) const {
    MarkedTree t;
    t.components.push_back({pts});
    std::function<void(int, int)> attach = [&](int sub, int parent) {
      const Subtree& s = all_[static_cast<std::size_t>(sub)];
      const int me = static_cast<int>(t.components.size());
      t.components.push_back({s.points});
      t.edges.emplace_back(parent, me);
      for (int c : s.children) attach(c, me);
    };
    for (int c : children) attach(c, 0);
    return t;
  }

  const WeightVector& weights() const { return w_; }

 private:
  void build_key(int d, bool chi) {
    std::set<std::string> seen;
    std::vector<int>& bucket = by_key_[{d, chi}];
    for (const auto& lc : local_choices(d, chi, false)) {
      children_sets(lc.child_degree, lc.child_chi, [&](const std::vector<int>& kids) {
        // One edge to the parent plus one per child.
        Rational deg = Rational(-1 + static_cast<int>(kids.size())) + lc.weight;
        if (deg.sign() <= 0) return;
        Subtree s;
        s.points = lc.points;
        s.children = kids;
        s.degree = d;
        s.chi = chi;
        s.cert = cert_of(s.points, kids);
        if (!seen.insert(s.cert).second) return;
        bucket.push_back(static_cast<int>(all_.size()));
        all_.push_back(std::move(s));
      });
    }
  }

  WeightVector w_;
  int max_mult_;
  std::deque<Subtree> all_;
  std::map<std::pair<int, bool>, std::vector<int>> by_key_;
};

}  // namespace

std::vector<MarkedTree> enumerate_strata(int n, const WeightVector& w, const EnumerateOptions& opts) {
  if (n > opts.size_limit)
    fail(ErrorKind::TooLarge, "n = " + std::to_string(n) + " exceeds the enumeration limit " + std::to_string(opts.size_limit));
  w.validate();
  const int degree = w.pointed() ? n : n + 1;
  if (n < 1) fail(ErrorKind::PreconditionViolated, "n must be positive");
  if (w.branch_degree != degree)
    fail(ErrorKind::PreconditionViolated, "weight branch degree " + std::to_string(w.branch_degree) + " does not match n = " +
                                              std::to_string(n) + " (expected " + std::to_string(degree) + ")");
  const int max_mult = static_cast<int>((Rational(1) / w.branch_weight).floor().get_si());
  Enumerator en(w, max_mult);
  en.build(degree);

  const auto roots = en.local_choices(degree, w.pointed(), true);
  std::vector<std::vector<std::pair<std::string, MarkedTree>>> found(roots.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < roots.size(); i = next++) {
      const LocalChoice& lc = roots[i];
      en.children_sets(lc.child_degree, lc.child_chi, [&](const std::vector<int>& kids) {
        // The tau point contributes its weight 1 through lc.weight.
        Rational deg = Rational(-2 + static_cast<int>(kids.size())) + lc.weight;
        if (deg.sign() <= 0) return;
        MarkedTree t = en.realize(lc.points, kids);
        found[i].emplace_back(canonical_form(t), std::move(t));
      });
    }
  };
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<std::tuple<int, std::string, MarkedTree>> all;
  std::set<std::string> seen;
  for (auto& bucket : found) {
    for (auto& [cert, t] : bucket) {
      if (!seen.insert(cert).second) continue;
      const int codim = label_of(t).codim;
      if (opts.max_codim && codim > *opts.max_codim) continue;
      all.emplace_back(codim, cert, canonicalize(t));
    }
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  std::vector<MarkedTree> out;
  out.reserve(all.size());
  for (auto& e : all) out.push_back(std::move(std::get<2>(e)));
  return out;
}

}  // namespace qadm
