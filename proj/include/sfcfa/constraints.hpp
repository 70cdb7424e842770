#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sfcfa/labels.hpp"

namespace sfcfa {

/// Monotone conditional set constraints over an abstract environment
/// Gamma : Key -> P(Val) and an activation map phi : BaseLabel -> Bool,
/// with a dependency-indexed worklist solver and a direct clause checker
/// that is independent of the solver.
///
/// Key and Val need a strict total order (operator<) and to_display_string
/// overloads for diagnostics.
template <class Key, class Val>
struct ConstraintSystem {
  // ---- guards (all monotone under growing Gamma/phi) ----
  struct ValueIn {
    Val v;
    Key at;
  };
  struct ActivationOf {
    BaseLabel n;
  };
  struct AnyIn {
    Key at;
    std::function<bool(const Val&)> pred;
    std::string what;
  };
  using GuardAtom = std::variant<ValueIn, ActivationOf, AnyIn>;
  struct Guard {
    std::vector<GuardAtom> atoms;  // conjunction; empty means "true"
  };

  // ---- constraints ----
  struct Constraint;

  struct Member {
    Val v;
    Key at;
  };
  struct Subset {
    Key from, to;
  };
  struct Guarded {
    Guard guard;
    std::vector<Constraint> body;
  };
  struct Activate {
    Guard guard;
    BaseLabel n;
  };
  /// A quantified clause family: for every value in Gamma(at) accepted by
  /// match, the constraints body(value) hold. Transcribes the analysis
  /// rules' "forall v in Gamma(l1)" clauses without enumerating candidates
  /// up front.
  struct ForallIn {
    Key at;
    std::function<bool(const Val&)> match;
    std::function<std::vector<Constraint>(const Val&)> body;
    std::string what;
  };
  /// The application-witness clause. Solving installs the canonical
  /// witness; checking evaluates the existential as written, so any
  /// already-present pair with pointwise-included components satisfies it.
  struct ExistsPair {
    Key at;
    Key left, right;
    Val canonical;
    std::function<std::optional<std::pair<Key, Key>>(const Val&)> as_pair;
  };

  struct Constraint {
    std::variant<Member, Subset, Guarded, Activate, ForallIn, ExistsPair> node;
  };

  static Constraint member(Val v, Key at) { return {Member{std::move(v), std::move(at)}}; }
  static Constraint subset(Key from, Key to) { return {Subset{std::move(from), std::move(to)}}; }
  static Constraint guarded(Guard g, std::vector<Constraint> body) {
    return {Guarded{std::move(g), std::move(body)}};
  }
  static Constraint cond_member(Guard g, Val v, Key at) {
    return guarded(std::move(g), {member(std::move(v), std::move(at))});
  }
  static Constraint cond_subset(Guard g, Key from, Key to) {
    return guarded(std::move(g), {subset(std::move(from), std::move(to))});
  }
  static Constraint activate(Guard g, BaseLabel n) { return {Activate{std::move(g), n}}; }
  static Constraint activate(BaseLabel n) { return {Activate{Guard{}, n}}; }
  static Constraint forall_in(Key at, std::function<bool(const Val&)> match,
                              std::function<std::vector<Constraint>(const Val&)> body,
                              std::string what) {
    return {ForallIn{std::move(at), std::move(match), std::move(body), std::move(what)}};
  }

  // ---- solution ----
  struct Solution {
    std::map<Key, std::set<Val>> gamma;
    std::set<BaseLabel> phi;
    std::uint64_t iterations = 0;

    const std::set<Val>& at(const Key& k) const {
      static const std::set<Val> kEmpty;
      auto it = gamma.find(k);
      return it == gamma.end() ? kEmpty : it->second;
    }
    bool contains(const Key& k, const Val& v) const { return at(k).count(v) != 0; }
    bool includes(const Key& sub, const Key& super) const {
      const auto& a = at(sub);
      const auto& b = at(super);
      for (const Val& v : a)
        if (!b.count(v)) return false;
      return true;
    }
    bool activated(BaseLabel n) const { return phi.count(n) != 0; }

    bool operator==(const Solution& o) const { return gamma == o.gamma && phi == o.phi; }

    /// Pointwise ordering of (Gamma, phi).
    bool below(const Solution& o) const {
      for (const auto& [k, vs] : gamma) {
        const auto& os = o.at(k);
        for (const Val& v : vs)
          if (!os.count(v)) return false;
      }
      for (BaseLabel n : phi)
        if (!o.phi.count(n)) return false;
      return true;
    }
  };

  // ---- worklist solver ----
  //
  // Keys and values are interned to dense indices; each Gamma row is a bit
  // set over the value universe, and subset edges push only the bits that
  // are new since the source row last flushed. Guards and quantified
  // families watch rows and wake incrementally, so each (constraint,
  // value) pair is looked at a bounded number of times.
  class Solver {
   public:
    explicit Solver(const std::vector<Constraint>& cs) {
      for (const Constraint& c : cs) install(c);
      run();
    }

    Solution take() {
      Solution s;
      for (const auto& [key, kid] : key_ids_) {
        std::set<Val> vals;
        for (std::uint32_t vid : order_[kid]) vals.insert(vals_[vid]);
        s.gamma.emplace(key, std::move(vals));
      }
      s.phi = phi_;
      s.iterations = iterations_;
      return s;
    }

   private:
    using Word = std::uint64_t;

    struct AGuarded {
      Guard guard;
      std::vector<Constraint> body;
      std::vector<bool> atom_done;
      std::vector<std::size_t> anyin_cursor;
      bool fired = false;
    };
    struct AActivate {
      Guard guard;
      BaseLabel n;
      std::vector<bool> atom_done;
      std::vector<std::size_t> anyin_cursor;
      bool fired = false;
    };
    struct AForall {
      std::uint32_t at;
      std::function<bool(const Val&)> match;
      std::function<std::vector<Constraint>(const Val&)> body;
      std::size_t cursor = 0;
    };
    using Active = std::variant<AGuarded, AActivate, AForall>;

    std::map<Key, std::uint32_t> key_ids_;
    std::map<Val, std::uint32_t> val_ids_;
    std::vector<Val> vals_;

    std::vector<std::vector<Word>> bits_;
    std::vector<std::vector<Word>> pending_;
    std::vector<std::vector<std::uint32_t>> order_;
    std::vector<std::vector<std::uint32_t>> edges_;     // subset targets per key
    std::vector<std::vector<std::uint32_t>> watchers_;  // constraint ids per key
    std::vector<bool> key_queued_;

    std::vector<Active> active_;
    std::vector<bool> constraint_queued_;

    std::map<BaseLabel, std::vector<std::uint32_t>> phi_watchers_;
    std::set<BaseLabel> phi_;

    // Tagged FIFO: even = key flush, odd = constraint wake.
    std::deque<std::uint64_t> queue_;
    std::uint64_t iterations_ = 0;

    std::uint32_t intern_key(const Key& k) {
      auto [it, inserted] = key_ids_.try_emplace(k, static_cast<std::uint32_t>(bits_.size()));
      if (inserted) {
        bits_.emplace_back();
        pending_.emplace_back();
        order_.emplace_back();
        edges_.emplace_back();
        watchers_.emplace_back();
        key_queued_.push_back(false);
      }
      return it->second;
    }

    std::uint32_t intern_val(const Val& v) {
      auto [it, inserted] = val_ids_.try_emplace(v, static_cast<std::uint32_t>(vals_.size()));
      if (inserted) vals_.push_back(v);
      return it->second;
    }

    void enqueue_key(std::uint32_t kid) {
      if (!key_queued_[kid]) {
        key_queued_[kid] = true;
        queue_.push_back(static_cast<std::uint64_t>(kid) << 1);
      }
    }

    void enqueue_constraint(std::uint32_t cid) {
      if (!constraint_queued_[cid]) {
        constraint_queued_[cid] = true;
        queue_.push_back((static_cast<std::uint64_t>(cid) << 1) | 1);
      }
    }

    void wake_watchers(std::uint32_t kid) {
      for (std::uint32_t cid : watchers_[kid]) enqueue_constraint(cid);
    }

    // Merge the given bits into key kid; newly set bits go to the pending
    // diff and wake the key's watchers.
    void merge_bits(std::uint32_t kid, const std::vector<Word>& words) {
      std::vector<Word>& row = bits_[kid];
      if (row.size() < words.size()) row.resize(words.size(), 0);
      std::vector<Word>& pend = pending_[kid];
      if (pend.size() < words.size()) pend.resize(words.size(), 0);
      bool grew = false;
      for (std::size_t w = 0; w < words.size(); ++w) {
        Word fresh = words[w] & ~row[w];
        if (!fresh) continue;
        row[w] |= fresh;
        pend[w] |= fresh;
        grew = true;
        Word m = fresh;
        while (m) {
          unsigned bit = static_cast<unsigned>(__builtin_ctzll(m));
          m &= m - 1;
          order_[kid].push_back(static_cast<std::uint32_t>(w * 64 + bit));
        }
      }
      if (grew) {
        enqueue_key(kid);
        wake_watchers(kid);
      }
    }

    void add_value(std::uint32_t kid, const Val& v) {
      std::uint32_t vid = intern_val(v);
      std::vector<Word>& row = bits_[kid];
      std::size_t w = vid / 64;
      if (row.size() <= w) row.resize(w + 1, 0);
      Word mask = Word{1} << (vid % 64);
      if (row[w] & mask) return;
      row[w] |= mask;
      std::vector<Word>& pend = pending_[kid];
      if (pend.size() <= w) pend.resize(w + 1, 0);
      pend[w] |= mask;
      order_[kid].push_back(vid);
      enqueue_key(kid);
      wake_watchers(kid);
    }

    bool has_value(std::uint32_t kid, const Val& v) const {
      auto it = val_ids_.find(v);
      if (it == val_ids_.end()) return false;
      std::uint32_t vid = it->second;
      const std::vector<Word>& row = bits_[kid];
      std::size_t w = vid / 64;
      return w < row.size() && (row[w] >> (vid % 64)) & 1;
    }

    void set_phi(BaseLabel n) {
      if (!phi_.insert(n).second) return;
      auto it = phi_watchers_.find(n);
      if (it != phi_watchers_.end())
        for (std::uint32_t cid : it->second) enqueue_constraint(cid);
    }

    void subscribe_guard(const Guard& g, std::uint32_t cid) {
      for (const GuardAtom& a : g.atoms) {
        if (const auto* vi = std::get_if<ValueIn>(&a))
          watchers_[intern_key(vi->at)].push_back(cid);
        else if (const auto* ao = std::get_if<ActivationOf>(&a))
          phi_watchers_[ao->n].push_back(cid);
        else if (const auto* ai = std::get_if<AnyIn>(&a))
          watchers_[intern_key(ai->at)].push_back(cid);
      }
    }

    // Monotone incremental conjunction: satisfied atoms stay satisfied,
    // and each AnyIn atom scans a row at most once across all wakes.
    bool guard_update(const Guard& g, std::vector<bool>& atom_done,
                      std::vector<std::size_t>& anyin_cursor) {
      if (atom_done.empty()) {
        atom_done.assign(g.atoms.size(), false);
        anyin_cursor.assign(g.atoms.size(), 0);
      }
      bool all = true;
      for (std::size_t i = 0; i < g.atoms.size(); ++i) {
        if (atom_done[i]) continue;
        const GuardAtom& a = g.atoms[i];
        if (const auto* vi = std::get_if<ValueIn>(&a)) {
          auto it = key_ids_.find(vi->at);
          if (it != key_ids_.end() && has_value(it->second, vi->v)) atom_done[i] = true;
        } else if (const auto* ao = std::get_if<ActivationOf>(&a)) {
          if (phi_.count(ao->n)) atom_done[i] = true;
        } else if (const auto* ai = std::get_if<AnyIn>(&a)) {
          auto it = key_ids_.find(ai->at);
          if (it != key_ids_.end()) {
            const std::vector<std::uint32_t>& ord = order_[it->second];
            std::size_t& cur = anyin_cursor[i];
            while (cur < ord.size()) {
              if (ai->pred(vals_[ord[cur++]])) {
                atom_done[i] = true;
                break;
              }
            }
          }
        }
        all = all && atom_done[i];
      }
      return all;
    }

    void install(const Constraint& c) {
      if (const auto* m = std::get_if<Member>(&c.node)) {
        add_value(intern_key(m->at), m->v);
      } else if (const auto* e = std::get_if<ExistsPair>(&c.node)) {
        add_value(intern_key(e->at), e->canonical);
      } else if (const auto* s = std::get_if<Subset>(&c.node)) {
        std::uint32_t from = intern_key(s->from);
        std::uint32_t to = intern_key(s->to);
        if (from == to) return;
        edges_[from].push_back(to);
        merge_bits(to, bits_[from]);
      } else if (const auto* g = std::get_if<Guarded>(&c.node)) {
        std::uint32_t cid = static_cast<std::uint32_t>(active_.size());
        active_.push_back(AGuarded{g->guard, g->body, {}, {}, false});
        constraint_queued_.push_back(false);
        subscribe_guard(g->guard, cid);
        enqueue_constraint(cid);
      } else if (const auto* a = std::get_if<Activate>(&c.node)) {
        std::uint32_t cid = static_cast<std::uint32_t>(active_.size());
        active_.push_back(AActivate{a->guard, a->n, {}, {}, false});
        constraint_queued_.push_back(false);
        subscribe_guard(a->guard, cid);
        enqueue_constraint(cid);
      } else if (const auto* f = std::get_if<ForallIn>(&c.node)) {
        std::uint32_t cid = static_cast<std::uint32_t>(active_.size());
        active_.push_back(AForall{intern_key(f->at), f->match, f->body});
        constraint_queued_.push_back(false);
        watchers_[std::get<AForall>(active_.back()).at].push_back(cid);
        enqueue_constraint(cid);
      }
    }

    void flush_key(std::uint32_t kid) {
      std::vector<Word> diff;
      diff.swap(pending_[kid]);
      bool any = false;
      for (Word w : diff) any = any || w != 0;
      if (!any) return;
      // Copy: installing constraints while iterating may grow edges_[kid].
      for (std::size_t i = 0; i < edges_[kid].size(); ++i) {
        std::uint32_t to = edges_[kid][i];
        merge_bits(to, diff);
      }
    }

    void process_constraint(std::uint32_t cid) {
      if (std::get_if<AGuarded>(&active_[cid])) {
        auto* g = std::get_if<AGuarded>(&active_[cid]);
        if (g->fired) return;
        if (!guard_update(g->guard, g->atom_done, g->anyin_cursor)) return;
        g->fired = true;
        std::vector<Constraint> body = std::move(g->body);
        for (const Constraint& c : body) install(c);
      } else if (std::get_if<AActivate>(&active_[cid])) {
        auto* a = std::get_if<AActivate>(&active_[cid]);
        if (a->fired) return;
        if (!guard_update(a->guard, a->atom_done, a->anyin_cursor)) return;
        a->fired = true;
        set_phi(a->n);
      } else {
        // install() may grow active_, so re-fetch the state each round.
        for (;;) {
          auto* f = std::get_if<AForall>(&active_[cid]);
          if (f->cursor >= order_[f->at].size()) break;
          Val v = vals_[order_[f->at][f->cursor++]];
          if (f->match(v)) {
            std::vector<Constraint> body = f->body(v);
            for (const Constraint& c : body) install(c);
          }
        }
      }
    }

    void run() {
      while (!queue_.empty()) {
        std::uint64_t item = queue_.front();
        queue_.pop_front();
        ++iterations_;
        if (item & 1) {
          std::uint32_t cid = static_cast<std::uint32_t>(item >> 1);
          constraint_queued_[cid] = false;
          process_constraint(cid);
        } else {
          std::uint32_t kid = static_cast<std::uint32_t>(item >> 1);
          key_queued_[kid] = false;
          flush_key(kid);
        }
      }
    }
  };

  /// Least (Gamma, phi) satisfying the constraints.
  static Solution solve(const std::vector<Constraint>& cs) {
    Solver s(cs);
    return s.take();
  }

  // ---- direct checker ----
  struct CheckOptions {
    /// Evaluate the application witness as a literal canonical membership
    /// instead of the existential. Deliberately wrong; used to demonstrate
    /// that the substitution lemma needs the existential form.
    bool weaken_exists = false;
    /// Stop collecting after this many violations.
    std::size_t max_violations = 64;
  };

  static bool guard_holds_in(const Guard& g, const Solution& env) {
    for (const GuardAtom& a : g.atoms) {
      if (const auto* vi = std::get_if<ValueIn>(&a)) {
        if (!env.contains(vi->at, vi->v)) return false;
      } else if (const auto* ao = std::get_if<ActivationOf>(&a)) {
        if (!env.activated(ao->n)) return false;
      } else if (const auto* ai = std::get_if<AnyIn>(&a)) {
        bool any = false;
        for (const Val& v : env.at(ai->at))
          if (ai->pred(v)) {
            any = true;
            break;
          }
        if (!any) return false;
      }
    }
    return true;
  }

  static void check_one(const Constraint& c, const Solution& env, const CheckOptions& opt,
                        std::vector<std::string>& violations) {
    if (violations.size() >= opt.max_violations) return;
    if (const auto* m = std::get_if<Member>(&c.node)) {
      if (!env.contains(m->at, m->v))
        violations.push_back(to_display_string(m->v) + " not in Gamma(" +
                             to_display_string(m->at) + ")");
    } else if (const auto* s = std::get_if<Subset>(&c.node)) {
      for (const Val& v : env.at(s->from))
        if (!env.contains(s->to, v)) {
          violations.push_back("Gamma(" + to_display_string(s->from) + ") is not within Gamma(" +
                               to_display_string(s->to) + "): missing " + to_display_string(v));
          break;
        }
    } else if (const auto* g = std::get_if<Guarded>(&c.node)) {
      if (guard_holds_in(g->guard, env))
        for (const Constraint& b : g->body) check_one(b, env, opt, violations);
    } else if (const auto* a = std::get_if<Activate>(&c.node)) {
      if (guard_holds_in(a->guard, env) && !env.activated(a->n))
        violations.push_back("phi(" + std::to_string(a->n) + ") required but false");
    } else if (const auto* f = std::get_if<ForallIn>(&c.node)) {
      for (const Val& v : env.at(f->at)) {
        if (!f->match(v)) continue;
        std::vector<std::string> inner;
        for (const Constraint& b : f->body(v)) check_one(b, env, opt, inner);
        for (std::string& msg : inner)
          violations.push_back(f->what + " [" + to_display_string(v) + "]: " + std::move(msg));
        if (violations.size() >= opt.max_violations) return;
      }
    } else if (const auto* e = std::get_if<ExistsPair>(&c.node)) {
      if (opt.weaken_exists) {
        if (!env.contains(e->at, e->canonical))
          violations.push_back(to_display_string(e->canonical) + " not in Gamma(" +
                               to_display_string(e->at) + ") (weakened witness check)");
        return;
      }
      for (const Val& v : env.at(e->at)) {
        auto pair = e->as_pair(v);
        if (!pair) continue;
        if (env.includes(e->left, pair->first) && env.includes(e->right, pair->second)) return;
      }
      violations.push_back("no application witness in Gamma(" + to_display_string(e->at) +
                           ") covers Gamma(" + to_display_string(e->left) + "), Gamma(" +
                           to_display_string(e->right) + ")");
    }
  }

  /// True iff every constraint holds in (Gamma, phi); failing clauses are
  /// reported by name.
  static bool check(const std::vector<Constraint>& cs, const Solution& env,
                    std::vector<std::string>* violations = nullptr,
                    const CheckOptions& opt = {}) {
    std::vector<std::string> local;
    std::vector<std::string>& out = violations ? *violations : local;
    for (const Constraint& c : cs) {
      check_one(c, env, opt, out);
      if (out.size() >= opt.max_violations) break;
    }
    return out.empty();
  }
};

}  // namespace sfcfa
