#include "potalg/groebner.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "potalg/linalg.hpp"

namespace potalg {

std::string to_string(MonomialOrder order) {
    return order == MonomialOrder::DegLex ? "deglex" : "low-degree-first";
}

// ---------------------------------------------------------------- LeadIndex

LeadIndex::LeadIndex(int generators) : n_(generators) { add_node(); }

std::int32_t LeadIndex::add_node() {
    children_.resize(children_.size() + static_cast<std::size_t>(n_), -1);
    terminal_.push_back(-1);
    return static_cast<std::int32_t>(terminal_.size() - 1);
}

void LeadIndex::insert(const Word& w, std::uint32_t id) {
    std::int32_t node = 0;
    for (Letter l : w) {
        std::int32_t next = child(node, l);
        if (next < 0) {
            next = add_node();
            children_[static_cast<std::size_t>(node) * n_ + (l - 1)] = next;
        }
        node = next;
    }
    terminal_[node] = id;
}

void LeadIndex::erase(const Word& w) {
    std::int32_t node = 0;
    for (Letter l : w) {
        node = child(node, l);
        if (node < 0)
            return;
    }
    terminal_[node] = -1;
}

void LeadIndex::clear() {
    children_.clear();
    terminal_.clear();
    add_node();
}

std::optional<LeadIndex::Match> LeadIndex::find(const Word& w) const {
    const std::size_t len = w.degree();
    for (std::size_t s = 0; s < len; ++s) {
        std::int32_t node = 0;
        for (std::size_t i = s; i < len; ++i) {
            node = child(node, w[i]);
            if (node < 0)
                break;
            if (terminal_[node] >= 0)
                return Match{static_cast<std::uint32_t>(terminal_[node]), s};
        }
    }
    return std::nullopt;
}

namespace {

// ------------------------------------------------------------- ordering

bool order_greater(const Word& a, const Word& b, MonomialOrder order) {
    if (order == MonomialOrder::LowDegreeFirst && a.degree() != b.degree())
        return a.degree() < b.degree();
    return a > b;
}

struct OrderLess {
    MonomialOrder order;
    bool operator()(const Word& a, const Word& b) const { return order_greater(b, a, order); }
};

/// Aho-Corasick automaton over the leading words; a state is "dead" when
/// the text read so far contains a leading word.
class LeadAutomaton {
public:
    LeadAutomaton(int n, const std::vector<Word>& leads) : n_(n) {
        next_.assign(static_cast<std::size_t>(n), -1);
        dead_.push_back(false);
        for (const Word& w : leads) {
            std::int32_t s = 0;
            for (Letter l : w) {
                auto& t = next_[static_cast<std::size_t>(s) * n + (l - 1)];
                if (t < 0) {
                    t = static_cast<std::int32_t>(dead_.size());
                    next_.resize(next_.size() + static_cast<std::size_t>(n), -1);
                    dead_.push_back(false);
                }
                s = next_[static_cast<std::size_t>(s) * n + (l - 1)];
            }
            dead_[s] = true;
        }
        // breadth-first completion of the transition table
        std::vector<std::int32_t> fail(dead_.size(), 0);
        std::queue<std::int32_t> q;
        for (int l = 0; l < n; ++l) {
            auto& t = next_[l];
            if (t < 0)
                t = 0;
            else
                q.push(t);
        }
        while (!q.empty()) {
            std::int32_t s = q.front();
            q.pop();
            dead_[s] = dead_[s] || dead_[fail[s]];
            for (int l = 0; l < n; ++l) {
                auto& t = next_[static_cast<std::size_t>(s) * n + l];
                std::int32_t via_fail = next_[static_cast<std::size_t>(fail[s]) * n + l];
                if (t < 0)
                    t = via_fail;
                else {
                    fail[t] = via_fail;
                    q.push(t);
                }
            }
        }
    }

    std::size_t states() const { return dead_.size(); }
    std::int32_t step(std::int32_t s, int letter) const {
        return next_[static_cast<std::size_t>(s) * n_ + (letter - 1)];
    }
    bool dead(std::int32_t s) const { return dead_[s]; }

private:
    int n_;
    std::vector<std::int32_t> next_;
    std::vector<bool> dead_;
};

// ------------------------------------------------------------- reduction

/// Sparse accumulator that hands out its terms largest-first.
template <class Field>
class Accumulator {
public:
    using Element = typename Field::Element;

    Accumulator(const Field& field, MonomialOrder order) : field_(field), heap_(OrderLess{order}) {}

    void add(const Word& w, const Element& c) {
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (inserted)
            heap_.push(w);
        else
            it->second = field_.add(it->second, c);
    }

    /// Pops the largest word with a nonzero coefficient.
    bool pop(Word& w, Element& c) {
        while (!heap_.empty()) {
            w = heap_.top();
            heap_.pop();
            auto it = terms_.find(w);
            c = std::move(it->second);
            terms_.erase(it);
            if (!field_.is_zero(c))
                return true;
        }
        return false;
    }

private:
    const Field& field_;
    std::unordered_map<Word, Element> terms_;
    std::priority_queue<Word, std::vector<Word>, OrderLess> heap_;
};

template <class Field>
NCPoly<Field> reduce_with(const NCPoly<Field>& p, const std::vector<NCPoly<Field>>& elements,
                          const LeadIndex& index, MonomialOrder order, int degree_bound) {
    const Field& f = p.field();
    const bool truncate = order == MonomialOrder::LowDegreeFirst;
    Accumulator<Field> acc(f, order);
    for (const auto& t : p.terms()) {
        if (!truncate || static_cast<int>(t.word.degree()) <= degree_bound)
            acc.add(t.word, t.coeff);
    }
    std::vector<typename NCPoly<Field>::Term> out;
    Word w;
    typename Field::Element c = f.zero();
    while (acc.pop(w, c)) {
        auto match = index.find(w);
        if (!match) {
            out.push_back({w, std::move(c)});
            continue;
        }
        const auto& g = elements[match->id];
        const Word& lead = leading_word(g, order);
        Word u = w.prefix(match->pos);
        Word v = w.suffix(w.degree() - match->pos - lead.degree());
        for (const auto& t : g.terms()) {
            if (t.word == lead)
                continue;
            if (truncate && static_cast<int>(t.word.degree() + u.degree() + v.degree()) > degree_bound)
                continue;
            acc.add(u * t.word * v, f.neg(f.mul(c, t.coeff)));
        }
    }
    return NCPoly<Field>::from_terms(f, std::move(out));
}

template <class Field>
NCPoly<Field> make_monic(const NCPoly<Field>& p, MonomialOrder order) {
    const Field& f = p.field();
    const Word& lead = leading_word(p, order);
    auto c = p.coefficient(lead);
    if (f.is_one(c))
        return p;
    return p.scaled(f.inv(c));
}

/// S-polynomial of the overlap lead(left) = a*o, lead(right) = o*b.
template <class Field>
NCPoly<Field> overlap_spoly(const NCPoly<Field>& left, const Word& left_lead,
                            const NCPoly<Field>& right, const Word& right_lead, std::size_t overlap,
                            MonomialOrder order, int degree_bound) {
    Word front = left_lead.prefix(left_lead.degree() - overlap);
    Word back = right_lead.suffix(right_lead.degree() - overlap);
    NCPoly<Field> s = poly_combine(left.sandwiched(Word{}, back), right.sandwiched(front, Word{}),
                                   left.field().neg(left.field().one()));
    if (order == MonomialOrder::LowDegreeFirst)
        s = s.truncated(degree_bound);
    return s;
}

/// Proper suffix/prefix overlaps: suffix of a equals prefix of b.
std::vector<std::size_t> overlaps(const Word& a, const Word& b) {
    std::vector<std::size_t> out;
    const std::size_t max_len = std::min(a.degree(), b.degree());
    for (std::size_t len = 1; len < max_len; ++len) {
        if (std::equal(a.end() - len, a.end(), b.begin()))
            out.push_back(len);
    }
    return out;
}

bool contains_factor(const Word& w, const Word& f) {
    if (f.degree() > w.degree())
        return false;
    return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

template <class Field>
class Builder {
public:
    using Poly = NCPoly<Field>;

    Builder(const Field& field, int n, int degree_bound, MonomialOrder order)
        : field_(field), n_(n), bound_(degree_bound), order_(order), index_(n) {}

    void add_input(const Poly& p) { enqueue_poly(p); }

    std::vector<Poly> run() {
        while (!queue_.empty()) {
            Task task = queue_.top();
            queue_.pop();
            Poly s(field_);
            if (task.poly_slot >= 0) {
                s = std::move(stash_[task.poly_slot]);
            } else {
                if (!active_[task.left] || !active_[task.right])
                    continue;
                s = overlap_spoly(elements_[task.left], leads_[task.left], elements_[task.right],
                                  leads_[task.right], task.overlap, order_, bound_);
            }
            Poly r = reduce_with(s, elements_, index_, order_, bound_);
            if (!r.is_zero())
                adjoin(make_monic(r, order_));
        }
        return finish();
    }

private:
    struct Task {
        std::size_t degree;
        std::uint64_t seq;
        std::int64_t poly_slot;  // >= 0: stashed polynomial; else an overlap
        std::size_t left;
        std::size_t right;
        std::size_t overlap;
    };
    struct TaskAfter {
        bool operator()(const Task& a, const Task& b) const {
            return a.degree != b.degree ? a.degree > b.degree : a.seq > b.seq;
        }
    };

    void enqueue_poly(const Poly& p) {
        if (p.is_zero())
            return;
        stash_.push_back(p);
        queue_.push({leading_word(p, order_).degree(), seq_++,
                     static_cast<std::int64_t>(stash_.size() - 1), 0, 0, 0});
    }

    void adjoin(Poly g) {
        const std::size_t id = elements_.size();
        Word lead = leading_word(g, order_);
        // eager inter-reduction: any basis element whose lead contains the
        // new lead is withdrawn and reprocessed
        for (std::size_t e = 0; e < id; ++e) {
            if (active_[e] && contains_factor(leads_[e], lead)) {
                active_[e] = false;
                index_.erase(leads_[e]);
                enqueue_poly(elements_[e]);
            }
        }
        elements_.push_back(std::move(g));
        leads_.push_back(lead);
        active_.push_back(true);
        index_.insert(lead, static_cast<std::uint32_t>(id));

        for (std::size_t e = 0; e <= id; ++e) {
            if (!active_[e])
                continue;
            queue_overlaps(e, id);
            if (e != id)
                queue_overlaps(id, e);
        }
    }

    void queue_overlaps(std::size_t left, std::size_t right) {
        const Word& a = leads_[left];
        const Word& b = leads_[right];
        for (std::size_t len : overlaps(a, b)) {
            std::size_t deg = a.degree() + b.degree() - len;
            if (static_cast<int>(deg) <= bound_)
                queue_.push({deg, seq_++, -1, left, right, len});
        }
    }

    std::vector<Poly> finish() {
        std::vector<std::size_t> ids;
        for (std::size_t e = 0; e < elements_.size(); ++e) {
            if (active_[e])
                ids.push_back(e);
        }
        std::vector<Poly> out;
        for (std::size_t e : ids) {
            const Poly& g = elements_[e];
            const Word& lead = leads_[e];
            Poly tail = poly_combine(g, Poly::monomial(field_, lead, field_.one()),
                                     field_.neg(field_.one()));
            Poly reduced_tail = reduce_with(tail, elements_, index_, order_, bound_);
            out.push_back(Poly::monomial(field_, lead, field_.one()) + reduced_tail);
        }
        std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
            return order_greater(leading_word(b, order_), leading_word(a, order_), order_);
        });
        return out;
    }

    const Field& field_;
    int n_;
    int bound_;
    MonomialOrder order_;
    std::vector<Poly> elements_;
    std::vector<Word> leads_;
    std::vector<bool> active_;
    LeadIndex index_;
    std::vector<Poly> stash_;
    std::priority_queue<Task, std::vector<Task>, TaskAfter> queue_;
    std::uint64_t seq_ = 0;
};

template <class Field>
int relation_spread(const RelationSet<Field>& rels) {
    int lo = -1, hi = -1;
    for (const auto& r : rels.relations) {
        if (r.is_zero())
            continue;
        lo = lo < 0 ? r.min_degree() : std::min(lo, r.min_degree());
        hi = std::max(hi, r.degree());
    }
    return lo < 0 ? 0 : hi - lo;
}

void check_bound(int degree_bound) {
    if (degree_bound < 0 || degree_bound > static_cast<int>(Word::kMaxDegree))
        throw std::invalid_argument("degree bound must lie in 0.." + std::to_string(Word::kMaxDegree));
}

}  // namespace

// ---------------------------------------------------------------- public

template <class Field>
const Word& leading_word(const NCPoly<Field>& p, MonomialOrder order) {
    const auto& terms = p.terms();
    if (order == MonomialOrder::DegLex)
        return terms.front().word;
    // the lowest-degree block is at the back; its first term is lex-largest
    std::size_t i = terms.size() - 1;
    const std::size_t d = terms[i].word.degree();
    while (i > 0 && terms[i - 1].word.degree() == d)
        --i;
    return terms[i].word;
}

template <class Field>
TruncatedGB<Field>::TruncatedGB(Field field, int generators, int degree_bound, MonomialOrder order,
                                std::vector<Poly> elements, int relation_spread)
    : field_(std::move(field)),
      n_(generators),
      degree_bound_(degree_bound),
      order_(order),
      elements_(std::move(elements)),
      index_(generators),
      relation_spread_(relation_spread) {
    check_bound(degree_bound);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        leads_.push_back(leading_word(elements_[i], order_));
        index_.insert(leads_.back(), static_cast<std::uint32_t>(i));
    }
}

template <class Field>
int TruncatedGB<Field>::reliable_degree() const {
    if (order_ == MonomialOrder::LowDegreeFirst)
        return degree_bound_;
    return degree_bound_ - relation_spread_;
}

template <class Field>
TruncatedGB<Field> truncated_groebner(const RelationSet<Field>& rels, int degree_bound,
                                      MonomialOrder order) {
    check_bound(degree_bound);
    const int n = rels.generators;
    if (n < 1)
        throw std::invalid_argument("relation set needs at least one generator");
    bool any = false;
    std::optional<Field> field;
    for (const auto& r : rels.relations) {
        if (!field)
            field = r.field();
        else if (!(*field == r.field()))
            throw std::invalid_argument("field mismatch between relations");
        if (r.is_zero())
            continue;
        any = true;
        if (r.max_letter() > n)
            throw std::invalid_argument("relation uses a generator above x" + std::to_string(n));
        if (order == MonomialOrder::DegLex && r.degree() > degree_bound)
            throw std::invalid_argument("relation degree exceeds the degree bound");
    }
    if (!any)
        throw std::invalid_argument("truncated_groebner needs a nonzero relation");

    Builder<Field> builder(*field, n, degree_bound, order);
    for (const auto& r : rels.relations) {
        auto p = order == MonomialOrder::LowDegreeFirst ? r.truncated(degree_bound) : r;
        if (!p.is_zero())
            builder.add_input(p);
    }
    return TruncatedGB<Field>(*field, n, degree_bound, order, builder.run(), relation_spread(rels));
}

template <class Field>
NCPoly<Field> normal_form(const NCPoly<Field>& p, const TruncatedGB<Field>& gb) {
    if (p.degree() > gb.degree_bound())
        throw std::invalid_argument("polynomial degree exceeds the basis degree bound");
    return reduce_with(p, gb.elements(), gb.index(), gb.order(), gb.degree_bound());
}

template <class Field>
std::vector<Word> normal_words(const TruncatedGB<Field>& gb, int j) {
    if (j < 0 || j > gb.reliable_degree())
        throw std::out_of_range("degree " + std::to_string(j) + " outside the reliable range 0.." +
                                std::to_string(gb.reliable_degree()));
    LeadAutomaton aut(gb.generators(), gb.leads());
    std::vector<Word> out;
    Word w;
    auto dfs = [&](auto&& self, std::int32_t state) -> void {
        if (static_cast<int>(w.degree()) == j) {
            out.push_back(w);
            return;
        }
        for (int l = 1; l <= gb.generators(); ++l) {
            std::int32_t next = aut.step(state, l);
            if (aut.dead(next))
                continue;
            w.push_back(static_cast<Letter>(l));
            self(self, next);
            w.pop_back();
        }
    };
    dfs(dfs, 0);
    return out;
}

template <class Field>
std::vector<std::int64_t> normal_word_counts(const TruncatedGB<Field>& gb, int upto) {
    if (upto < 0 || upto > gb.reliable_degree())
        throw std::out_of_range("degree " + std::to_string(upto) + " outside the reliable range 0.." +
                                std::to_string(gb.reliable_degree()));
    LeadAutomaton aut(gb.generators(), gb.leads());
    std::vector<std::int64_t> ways(aut.states(), 0), next(aut.states(), 0);
    ways[0] = 1;
    std::vector<std::int64_t> counts{1};
    for (int d = 1; d <= upto; ++d) {
        std::fill(next.begin(), next.end(), 0);
        for (std::size_t s = 0; s < aut.states(); ++s) {
            if (ways[s] == 0)
                continue;
            for (int l = 1; l <= gb.generators(); ++l) {
                std::int32_t t = aut.step(static_cast<std::int32_t>(s), l);
                if (!aut.dead(t))
                    next[t] += ways[s];
            }
        }
        ways.swap(next);
        std::int64_t total = 0;
        for (auto v : ways)
            total += v;
        counts.push_back(total);
    }
    return counts;
}

template <class Field>
std::vector<Ambiguity<Field>> ambiguity_remainders(const TruncatedGB<Field>& gb) {
    std::vector<Ambiguity<Field>> out;
    const auto& els = gb.elements();
    const auto& leads = gb.leads();
    for (std::size_t i = 0; i < els.size(); ++i) {
        for (std::size_t j = 0; j < els.size(); ++j) {
            for (std::size_t len : overlaps(leads[i], leads[j])) {
                std::size_t deg = leads[i].degree() + leads[j].degree() - len;
                if (static_cast<int>(deg) > gb.degree_bound())
                    continue;
                auto s = overlap_spoly(els[i], leads[i], els[j], leads[j], len, gb.order(),
                                       gb.degree_bound());
                out.push_back({leads[i] * leads[j].suffix(leads[j].degree() - len), i, j,
                               normal_form(s, gb)});
            }
        }
    }
    return out;
}

template <class Field>
SeriesTable brute_force_graded_dims(const RelationSet<Field>& rels, int degree_bound) {
    check_bound(degree_bound);
    const int n = rels.generators;
    if (n < 1)
        throw std::invalid_argument("relation set needs at least one generator");
    std::size_t top = 1;
    for (int d = 0; d < degree_bound; ++d) {
        top *= static_cast<std::size_t>(n);
        if (top > kBruteForceWordLimit)
            throw std::invalid_argument("brute force guard exceeded: n^D > " +
                                        std::to_string(kBruteForceWordLimit));
    }
    std::vector<const NCPoly<Field>*> nonzero;
    for (const auto& r : rels.relations) {
        if (r.is_zero())
            continue;
        if (!r.is_homogeneous())
            throw std::invalid_argument("brute force oracle needs homogeneous relations");
        nonzero.push_back(&r);
    }

    SeriesTable table;
    table.kind = SeriesKind::GradedDims;
    table.n = n;
    table.degree_bound = degree_bound;
    std::size_t space = 1;
    for (int d = 0; d <= degree_bound; ++d) {
        if (d > 0)
            space *= static_cast<std::size_t>(n);
        if (nonzero.empty()) {
            table.coeffs.push_back(static_cast<std::int64_t>(space));
            continue;
        }
        const Field& f = nonzero.front()->field();
        EchelonBasis<Field> basis(f);
        for (const auto* r : nonzero) {
            const int e = r->degree();
            if (e > d)
                continue;
            const int free = d - e;
            for (int a = 0; a <= free; ++a) {
                const int b = free - a;
                std::size_t nu = 1, nv = 1;
                for (int i = 0; i < a; ++i)
                    nu *= static_cast<std::size_t>(n);
                for (int i = 0; i < b; ++i)
                    nv *= static_cast<std::size_t>(n);
                for (std::size_t iu = 0; iu < nu; ++iu) {
                    Word u = word_from_rank(iu, n, static_cast<std::size_t>(a));
                    for (std::size_t iv = 0; iv < nv; ++iv) {
                        Word v = word_from_rank(iv, n, static_cast<std::size_t>(b));
                        SparseVector<Field> vec;
                        for (const auto& t : r->terms())
                            vec.emplace_back(static_cast<std::uint32_t>(word_rank(u * t.word * v, n)),
                                             t.coeff);
                        basis.insert(std::move(vec));
                    }
                }
            }
        }
        table.coeffs.push_back(static_cast<std::int64_t>(space - basis.rank()));
    }
    return table;
}

#define POTALG_INSTANTIATE(F)                                                                    \
    template class TruncatedGB<F>;                                                               \
    template const Word& leading_word(const NCPoly<F>&, MonomialOrder);                          \
    template TruncatedGB<F> truncated_groebner(const RelationSet<F>&, int, MonomialOrder);       \
    template NCPoly<F> normal_form(const NCPoly<F>&, const TruncatedGB<F>&);                     \
    template std::vector<Word> normal_words(const TruncatedGB<F>&, int);                         \
    template std::vector<std::int64_t> normal_word_counts(const TruncatedGB<F>&, int);           \
    template std::vector<Ambiguity<F>> ambiguity_remainders(const TruncatedGB<F>&);              \
    template SeriesTable brute_force_graded_dims(const RelationSet<F>&, int);

POTALG_INSTANTIATE(PrimeField)
POTALG_INSTANTIATE(RationalField)

#undef POTALG_INSTANTIATE

}  // namespace potalg
