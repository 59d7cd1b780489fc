#include "palinruler/levelang.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

namespace palinruler {

bool Dfa::accepts(const BinaryWord& w) const {
    std::uint32_t q = initial;
    for (auto d : w.bits) q = delta[q][d];
    return accepting[q] != 0;
}

bool Dfa::accepts(std::uint64_t n) const { return accepts(to_binary(n)); }

Dfa dfa_for_run_count(std::uint32_t m) {
    if (m == 0) throw std::invalid_argument("dfa_for_run_count: need m >= 1");
    // States: 0 = start, r = inside the r-th block (1-based), m+1 = sink.
    // Expansions carry no leading zeros, so block r reads 1 when r is odd.
    Dfa d;
    d.num_states = m + 2;
    const std::uint32_t sink = m + 1;
    d.initial = 0;
    d.delta.assign(d.num_states, {sink, sink});
    d.accepting.assign(d.num_states, 0);
    d.delta[0] = {sink, 1};
    for (std::uint32_t r = 1; r <= m; ++r) {
        const std::uint32_t keep = (r & 1) ? 1u : 0u;
        d.delta[r][keep] = r;
        d.delta[r][1 - keep] = r < m ? r + 1 : sink;
    }
    d.accepting[m] = 1;
    return d;
}

LevelSet level_set(const std::function<std::uint64_t(std::uint64_t)>& f,
                   std::uint64_t epsilon, std::uint64_t n_max) {
    if (n_max == 0) throw std::invalid_argument("level_set: need n_max >= 1");
    LevelSet ls;
    ls.epsilon = epsilon;
    ls.bound = n_max;
    for (std::uint64_t n = 1; n <= n_max; ++n)
        if (f(n) == epsilon) ls.members.push_back(n);
    return ls;
}

LevelSet level_set(const PalLengthTable& table, std::uint64_t epsilon,
                   std::uint64_t n_max) {
    if (n_max > table.n_max)
        throw std::invalid_argument("level_set: n_max beyond table (" +
                                    std::to_string(n_max) + " > " +
                                    std::to_string(table.n_max) + ")");
    return level_set([&](std::uint64_t n) { return std::uint64_t{table.values[n]}; },
                     epsilon, n_max);
}

std::vector<std::uint64_t> verify_dfa(const Dfa& dfa, const LevelSet& ls) {
    std::vector<std::uint64_t> bad;
    std::size_t at = 0;
    for (std::uint64_t n = 1; n <= ls.bound; ++n) {
        while (at < ls.members.size() && ls.members[at] < n) ++at;
        const bool member = at < ls.members.size() && ls.members[at] == n;
        if (dfa.accepts(n) != member) bad.push_back(n);
    }
    return bad;
}

namespace {

// Reachable states in BFS order from the initial state, 0-edge first.
std::vector<std::uint32_t> bfs_order(const Dfa& d) {
    std::vector<std::uint32_t> order;
    std::vector<std::uint8_t> seen(d.num_states, 0);
    std::deque<std::uint32_t> queue{d.initial};
    seen[d.initial] = 1;
    while (!queue.empty()) {
        const std::uint32_t q = queue.front();
        queue.pop_front();
        order.push_back(q);
        for (int bit = 0; bit < 2; ++bit) {
            const std::uint32_t to = d.delta[q][static_cast<std::size_t>(bit)];
            if (!seen[to]) {
                seen[to] = 1;
                queue.push_back(to);
            }
        }
    }
    return order;
}

void check_dfa(const Dfa& d, const char* who) {
    if (d.num_states == 0) throw std::invalid_argument(std::string(who) + ": empty automaton");
    if (d.delta.size() != d.num_states || d.accepting.size() != d.num_states)
        throw std::invalid_argument(std::string(who) + ": table sizes disagree with num_states");
    if (d.initial >= d.num_states)
        throw std::invalid_argument(std::string(who) + ": initial state out of range");
    for (const auto& row : d.delta)
        for (auto to : row)
            if (to >= d.num_states)
                throw std::invalid_argument(std::string(who) + ": transition out of range");
}

}  // namespace

std::uint32_t reachable_count(const Dfa& dfa) {
    check_dfa(dfa, "reachable_count");
    return static_cast<std::uint32_t>(bfs_order(dfa).size());
}

Dfa minimize(const Dfa& dfa) {
    check_dfa(dfa, "minimize");
    // Restrict to reachable states.
    const auto order = bfs_order(dfa);
    std::vector<std::uint32_t> compact(dfa.num_states, 0xFFFFFFFF);
    for (std::uint32_t idx = 0; idx < order.size(); ++idx) compact[order[idx]] = idx;
    const auto n = static_cast<std::uint32_t>(order.size());

    // Moore refinement on (class, class of 0-successor, class of 1-successor).
    std::vector<std::uint32_t> cls(n), delta0(n), delta1(n);
    std::vector<std::uint8_t> acc(n);
    for (std::uint32_t q = 0; q < n; ++q) {
        delta0[q] = compact[dfa.delta[order[q]][0]];
        delta1[q] = compact[dfa.delta[order[q]][1]];
        acc[q] = dfa.accepting[order[q]];
        cls[q] = acc[q];
    }
    std::uint32_t num_classes = 2;
    {
        // All-accepting or all-rejecting: a single class.
        bool any0 = false, any1 = false;
        for (auto a : acc) (a ? any1 : any0) = true;
        if (!any0 || !any1) {
            std::fill(cls.begin(), cls.end(), 0);
            num_classes = 1;
        }
    }
    while (true) {
        std::map<std::array<std::uint32_t, 3>, std::uint32_t> sig_to_class;
        std::vector<std::uint32_t> next(n);
        for (std::uint32_t q = 0; q < n; ++q) {
            const std::array<std::uint32_t, 3> sig{cls[q], cls[delta0[q]], cls[delta1[q]]};
            const auto [it, fresh] =
                sig_to_class.emplace(sig, static_cast<std::uint32_t>(sig_to_class.size()));
            next[q] = it->second;
            (void)fresh;
        }
        const auto count = static_cast<std::uint32_t>(sig_to_class.size());
        cls.swap(next);
        if (count == num_classes) break;
        num_classes = count;
    }

    // Canonical renumbering: BFS over classes from the initial class.
    std::vector<std::uint32_t> cls_delta0(num_classes), cls_delta1(num_classes);
    std::vector<std::uint8_t> cls_acc(num_classes);
    for (std::uint32_t q = 0; q < n; ++q) {
        cls_delta0[cls[q]] = cls[delta0[q]];
        cls_delta1[cls[q]] = cls[delta1[q]];
        cls_acc[cls[q]] = acc[q];
    }
    std::vector<std::uint32_t> renum(num_classes, 0xFFFFFFFF);
    std::deque<std::uint32_t> queue{cls[compact[dfa.initial]]};
    renum[queue.front()] = 0;
    std::uint32_t assigned = 1;
    Dfa out;
    while (!queue.empty()) {
        const std::uint32_t c = queue.front();
        queue.pop_front();
        for (std::uint32_t to : {cls_delta0[c], cls_delta1[c]}) {
            if (renum[to] == 0xFFFFFFFF) {
                renum[to] = assigned++;
                queue.push_back(to);
            }
        }
    }
    out.num_states = assigned;
    out.initial = 0;
    out.delta.assign(assigned, {0, 0});
    out.accepting.assign(assigned, 0);
    for (std::uint32_t c = 0; c < num_classes; ++c) {
        if (renum[c] == 0xFFFFFFFF) continue;  // class unreachable via class graph
        out.delta[renum[c]][0] = renum[cls_delta0[c]];
        out.delta[renum[c]][1] = renum[cls_delta1[c]];
        out.accepting[renum[c]] = cls_acc[c];
    }
    return out;
}

bool dfa_isomorphic(const Dfa& lhs, const Dfa& rhs) {
    check_dfa(lhs, "dfa_isomorphic");
    check_dfa(rhs, "dfa_isomorphic");
    // Paired BFS over the reachable parts; the pairing must be a bijection.
    std::vector<std::uint32_t> l2r(lhs.num_states, 0xFFFFFFFF);
    std::vector<std::uint32_t> r2l(rhs.num_states, 0xFFFFFFFF);
    std::deque<std::pair<std::uint32_t, std::uint32_t>> queue{{lhs.initial, rhs.initial}};
    l2r[lhs.initial] = rhs.initial;
    r2l[rhs.initial] = lhs.initial;
    while (!queue.empty()) {
        const auto [a, b] = queue.front();
        queue.pop_front();
        if (lhs.accepting[a] != rhs.accepting[b]) return false;
        for (int bit = 0; bit < 2; ++bit) {
            const std::uint32_t ta = lhs.delta[a][static_cast<std::size_t>(bit)];
            const std::uint32_t tb = rhs.delta[b][static_cast<std::size_t>(bit)];
            if (l2r[ta] == 0xFFFFFFFF && r2l[tb] == 0xFFFFFFFF) {
                l2r[ta] = tb;
                r2l[tb] = ta;
                queue.emplace_back(ta, tb);
            } else if (l2r[ta] != tb || r2l[tb] != ta) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Observation-table learner over the binary alphabet.
class Learner {
  public:
    Learner(const std::function<bool(std::uint64_t)>& membership,
            std::uint64_t max_index, std::uint32_t max_states, LearnResult& result)
        : membership_(membership), max_index_(max_index), max_states_(max_states),
          result_(result) {}

    bool run() {
        prefixes_ = {""};
        suffixes_ = {""};
        while (true) {
            if (!fill()) return false;
            if (repair_closure()) continue;
            if (repair_consistency()) continue;
            Dfa hyp = build();
            if (hyp.num_states > max_states_) {
                result_.diagnosis = "state budget exhausted: hypothesis has " +
                                    std::to_string(hyp.num_states) + " states, budget " +
                                    std::to_string(max_states_);
                return false;
            }
            ++result_.equivalence_rounds;
            std::uint64_t cex = 0;
            if (!find_counterexample(hyp, cex)) {
                result_.dfa = std::move(hyp);
                return true;
            }
            add_counterexample(cex);
        }
    }

  private:
    static constexpr std::uint64_t kQueryBudget = 1u << 24;

    bool member(const std::string& w) {
        // Only expansions of indices are in the language: anything empty or
        // with a leading zero is out, and longer words are out of domain.
        if (w.empty() || w[0] == '0') return false;
        if (w.size() > 63)
            throw std::length_error("membership word beyond 63 bits");
        std::uint64_t v = 0;
        for (char c : w) v = (v << 1) | static_cast<std::uint64_t>(c - '0');
        ++result_.membership_queries;
        return membership_(v);
    }

    bool cached_member(const std::string& w, bool& out) {
        if (auto it = cache_.find(w); it != cache_.end()) {
            out = it->second;
            return true;
        }
        if (result_.membership_queries >= kQueryBudget) {
            result_.diagnosis = "membership query budget exhausted";
            return false;
        }
        try {
            out = member(w);
        } catch (const std::length_error&) {
            result_.diagnosis = "table word beyond the 63-bit index domain";
            return false;
        }
        cache_.emplace(w, out);
        return true;
    }

    bool fill() {
        for (const auto& p : prefixes_)
            for (const char* a : {"", "0", "1"})
                for (const auto& s : suffixes_) {
                    bool dummy;
                    if (!cached_member(p + a + s, dummy)) return false;
                }
        return true;
    }

    std::string row(const std::string& p) {
        std::string sig;
        sig.reserve(suffixes_.size());
        for (const auto& s : suffixes_) {
            bool v = false;
            (void)cached_member(p + s, v);  // filled beforehand
            sig.push_back(v ? '1' : '0');
        }
        return sig;
    }

    bool has_prefix(const std::string& p) const {
        return std::find(prefixes_.begin(), prefixes_.end(), p) != prefixes_.end();
    }

    // Some extension row is missing among prefix rows: promote it.
    bool repair_closure() {
        std::map<std::string, std::uint32_t> rows;
        for (const auto& p : prefixes_) rows.emplace(row(p), 0);
        for (const auto& p : prefixes_)
            for (const char a : {'0', '1'}) {
                const std::string ext = p + a;
                if (!rows.count(row(ext)) && !has_prefix(ext)) {
                    prefixes_.push_back(ext);
                    return true;
                }
            }
        return false;
    }

    // Equal rows must stay equal after one-letter extension; otherwise the
    // distinguishing suffix joins the experiment set.
    bool repair_consistency() {
        for (std::size_t i = 0; i < prefixes_.size(); ++i)
            for (std::size_t j = i + 1; j < prefixes_.size(); ++j) {
                if (row(prefixes_[i]) != row(prefixes_[j])) continue;
                for (const char a : {'0', '1'}) {
                    const std::string ri = row(prefixes_[i] + a);
                    const std::string rj = row(prefixes_[j] + a);
                    if (ri == rj) continue;
                    for (std::size_t k = 0; k < suffixes_.size(); ++k)
                        if (ri[k] != rj[k]) {
                            suffixes_.push_back(std::string(1, a) + suffixes_[k]);
                            return true;
                        }
                }
            }
        return false;
    }

    Dfa build() {
        std::map<std::string, std::uint32_t> state_of;
        std::vector<std::string> reps;
        for (const auto& p : prefixes_) {
            const std::string r = row(p);
            if (state_of.emplace(r, static_cast<std::uint32_t>(reps.size())).second)
                reps.push_back(p);
        }
        Dfa d;
        d.num_states = static_cast<std::uint32_t>(reps.size());
        d.initial = state_of.at(row(""));
        d.delta.assign(d.num_states, {0, 0});
        d.accepting.assign(d.num_states, 0);
        for (std::uint32_t q = 0; q < d.num_states; ++q) {
            d.delta[q][0] = state_of.at(row(reps[q] + '0'));
            d.delta[q][1] = state_of.at(row(reps[q] + '1'));
            bool acc = false;
            (void)cached_member(reps[q], acc);
            d.accepting[q] = acc ? 1 : 0;
        }
        return d;
    }

    bool find_counterexample(const Dfa& hyp, std::uint64_t& cex) {
        for (std::uint64_t n = 1; n <= max_index_; ++n) {
            bool want = false;
            if (!cached_member(to_binary(n).str(), want))
                throw std::length_error("unreachable");  // budget handled by caller loop
            if (hyp.accepts(n) != want) {
                cex = n;
                return true;
            }
        }
        return false;
    }

    void add_counterexample(std::uint64_t cex) {
        const std::string w = to_binary(cex).str();
        for (std::size_t len = 1; len <= w.size(); ++len) {
            const std::string p = w.substr(0, len);
            if (!has_prefix(p)) prefixes_.push_back(p);
        }
    }

    const std::function<bool(std::uint64_t)>& membership_;
    std::uint64_t max_index_;
    std::uint32_t max_states_;
    LearnResult& result_;
    std::vector<std::string> prefixes_;
    std::vector<std::string> suffixes_;
    std::unordered_map<std::string, bool> cache_;
};

}  // namespace

LearnResult learn_level_set_dfa(const std::function<bool(std::uint64_t)>& membership,
                                std::uint64_t max_index, std::uint32_t max_states) {
    if (max_index == 0)
        throw std::invalid_argument("learn_level_set_dfa: need max_index >= 1");
    if (max_states == 0)
        throw std::invalid_argument("learn_level_set_dfa: need max_states >= 1");
    LearnResult result;
    Learner learner(membership, max_index, max_states, result);
    try {
        if (!learner.run() && result.diagnosis.empty())
            result.diagnosis = "learner stopped without a hypothesis";
    } catch (const std::length_error&) {
        if (result.diagnosis.empty())
            result.diagnosis = "membership query budget exhausted";
    }
    return result;
}

std::string dfa_serialize(const Dfa& dfa) {
    check_dfa(dfa, "dfa_serialize");
    std::ostringstream out;
    out << "states " << dfa.num_states << " initial " << dfa.initial << "\n";
    for (std::uint32_t q = 0; q < dfa.num_states; ++q)
        for (int bit = 0; bit < 2; ++bit)
            out << q << ' ' << bit << ' ' << dfa.delta[q][static_cast<std::size_t>(bit)]
                << "\n";
    out << "accepting";
    for (std::uint32_t q = 0; q < dfa.num_states; ++q)
        if (dfa.accepting[q]) out << ' ' << q;
    out << "\n";
    return out.str();
}

DfaParseError::DfaParseError(std::size_t line_, const std::string& what)
    : std::runtime_error("dfa_parse: line " + std::to_string(line_) + ": " + what),
      line(line_) {}

Dfa dfa_parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty()) return true;
        }
        return false;
    };

    if (!next_line()) throw DfaParseError(1, "missing header");
    Dfa d;
    {
        std::istringstream ls(line);
        std::string kw1, kw2;
        if (!(ls >> kw1 >> d.num_states >> kw2 >> d.initial) || kw1 != "states" ||
            kw2 != "initial")
            throw DfaParseError(lineno, "expected 'states <K> initial <q>'");
        std::string extra;
        if (ls >> extra) throw DfaParseError(lineno, "trailing tokens in header");
    }
    if (d.num_states == 0) throw DfaParseError(lineno, "need at least one state");
    if (d.initial >= d.num_states) throw DfaParseError(lineno, "initial state out of range");
    d.delta.assign(d.num_states, {0, 0});
    d.accepting.assign(d.num_states, 0);

    std::vector<std::uint8_t> seen(d.num_states * 2, 0);
    for (std::uint32_t expect = 0; expect < d.num_states * 2; ++expect) {
        if (!next_line()) throw DfaParseError(lineno + 1, "missing transition line");
        std::istringstream ls(line);
        std::uint32_t q = 0, bit = 0, to = 0;
        if (!(ls >> q >> bit >> to))
            throw DfaParseError(lineno, "expected '<q> <bit> <q2>'");
        std::string extra;
        if (ls >> extra) throw DfaParseError(lineno, "trailing tokens in transition");
        if (q >= d.num_states || bit > 1 || to >= d.num_states)
            throw DfaParseError(lineno, "transition out of range");
        if (seen[q * 2 + bit]) throw DfaParseError(lineno, "duplicate transition");
        if (q * 2 + bit != expect)
            throw DfaParseError(lineno, "transitions out of canonical order");
        seen[q * 2 + bit] = 1;
        d.delta[q][bit] = to;
    }

    if (!next_line()) throw DfaParseError(lineno + 1, "missing accepting line");
    {
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw != "accepting") throw DfaParseError(lineno, "expected 'accepting ...'");
        std::uint32_t q = 0;
        std::int64_t prev = -1;
        while (ls >> q) {
            if (q >= d.num_states) throw DfaParseError(lineno, "accepting state out of range");
            if (static_cast<std::int64_t>(q) <= prev)
                throw DfaParseError(lineno, "accepting states not strictly increasing");
            prev = q;
            d.accepting[q] = 1;
        }
        if (!ls.eof()) throw DfaParseError(lineno, "bad token in accepting line");
    }
    if (next_line()) throw DfaParseError(lineno, "unexpected trailing line");
    return d;
}

}  // namespace palinruler
