#include "trisect/editor.hpp"

namespace trisect {

ArrangementEditor::ArrangementEditor(const Arrangement& base) : base_(&base) {
    const auto& srf = base.surface();
    int edges = srf.edge_count();
    head_.assign(edges, -1);
    tail_.assign(edges, -1);
    base_tokens_.resize(edges);

    int total = 0;
    for (int letter = 0; letter < edges; ++letter) total += base.edge_crossings(letter);
    token_edge_.reserve(total + 16);
    next_.reserve(total + 16);
    prev_.reserve(total + 16);
    live_.reserve(total + 16);

    for (int letter = 0; letter < edges; ++letter) {
        int n = base.edge_crossings(letter);
        base_tokens_[letter].resize(n);
        int prev_tok = -1;
        for (int p = 0; p < n; ++p) {
            int t = static_cast<int>(token_edge_.size());
            token_edge_.push_back(letter);
            next_.push_back(-1);
            prev_.push_back(prev_tok);
            live_.push_back(1);
            if (prev_tok >= 0)
                next_[prev_tok] = t;
            else
                head_[letter] = t;
            prev_tok = t;
            base_tokens_[letter][p] = t;
        }
        tail_[letter] = prev_tok;
    }

    // Map events to their tokens via canonical positions.
    event_token_.clear();
    for (int f = 0; f < (int)base.families().size(); ++f)
        for (int c = 0; c < (int)base.families()[f].curves.size(); ++c) {
            const auto& ev = base.families()[f].curves[c].events;
            std::vector<int> toks(ev.size());
            for (int k = 0; k < (int)ev.size(); ++k) {
                int letter = SurfaceModel::edge_of(ev[k].seg);
                toks[k] = base_tokens_[letter][base.canonical_pos(ev[k]) - 1];
            }
            event_token_.push_back(std::move(toks));
        }
}

int ArrangementEditor::flat_curve(CurveId c) const {
    int flat = 0;
    for (int f = 0; f < c.family; ++f) flat += (int)base_->families()[f].curves.size();
    return flat + c.curve;
}

int ArrangementEditor::token_of(CurveId c, int event_index) const {
    return event_token_[flat_curve(c)][event_index];
}

int ArrangementEditor::new_token_before(int edge, int before) {
    int t = static_cast<int>(token_edge_.size());
    token_edge_.push_back(edge);
    live_.push_back(1);
    int prev = before >= 0 ? prev_[before] : tail_[edge];
    next_.push_back(before);
    prev_.push_back(prev);
    if (prev >= 0)
        next_[prev] = t;
    else
        head_[edge] = t;
    if (before >= 0)
        prev_[before] = t;
    else
        tail_[edge] = t;
    return t;
}

int ArrangementEditor::insert_adjacent(int token, bool after_in_canonical) {
    int edge = token_edge_[token];
    return new_token_before(edge, after_in_canonical ? next_[token] : token);
}

int ArrangementEditor::insert_at_gap(int edge, int gap) {
    auto& base_list = base_tokens_[edge];
    if (gap < 0 || gap > (int)base_list.size())
        throw ValidationError("band gap out of range on edge " + std::to_string(edge));
    int before = gap == (int)base_list.size() ? -1 : base_list[gap];
    return new_token_before(edge, before);
}

void ArrangementEditor::erase(int token) {
    int edge = token_edge_[token];
    int p = prev_[token], n = next_[token];
    if (p >= 0)
        next_[p] = n;
    else
        head_[edge] = n;
    if (n >= 0)
        prev_[n] = p;
    else
        tail_[edge] = p;
    live_[token] = 0;
}

ArrangementEditor::Layout ArrangementEditor::layout() const {
    Layout l;
    l.canon.assign(token_edge_.size(), 0);
    l.edge_n.assign(head_.size(), 0);
    for (int e = 0; e < (int)head_.size(); ++e) {
        int p = 0;
        for (int t = head_[e]; t >= 0; t = next_[t]) l.canon[t] = ++p;
        l.edge_n[e] = p;
    }
    return l;
}

Arrangement ArrangementEditor::finish(const std::vector<NewFamily>& families) const {
    Layout l = layout();
    const auto& canon = l.canon;
    const auto& edge_n = l.edge_n;

    std::vector<int> used(token_edge_.size(), 0);
    std::vector<Family> out;
    for (const auto& nf : families) {
        Family fam;
        fam.name = nf.name;
        for (const auto& nc : nf.curves) {
            Curve crv;
            crv.name = nc.name;
            for (const auto& ne : nc.events) {
                if (ne.token < 0 || ne.token >= (int)token_edge_.size() || !live_[ne.token])
                    throw InternalError("editor: reference to a dead token");
                used[ne.token]++;
                int edge = token_edge_[ne.token];
                if (SurfaceModel::edge_of(ne.seg) != edge)
                    throw InternalError("editor: recording segment off the token's edge");
                int p = canon[ne.token];
                int slot = SurfaceModel::is_lowercase(ne.seg) ? p : edge_n[edge] - p + 1;
                crv.events.push_back({ne.seg, slot});
            }
            fam.curves.push_back(std::move(crv));
        }
        out.push_back(std::move(fam));
    }
    for (int t = 0; t < (int)token_edge_.size(); ++t)
        if (live_[t] && used[t] != 1)
            throw InternalError("editor: token referenced " + std::to_string(used[t]) +
                                " times (must be exactly once)");
    return Arrangement::create(base_->surface(), out);
}

Arrangement ArrangementEditor::finish_with_replacement(CurveId replaced,
                                                       const std::vector<NewEvent>& events) const {
    std::vector<NewFamily> fams;
    for (int f = 0; f < (int)base_->families().size(); ++f) {
        NewFamily nf;
        nf.name = base_->families()[f].name;
        for (int c = 0; c < (int)base_->families()[f].curves.size(); ++c) {
            const Curve& crv = base_->families()[f].curves[c];
            NewCurve nc;
            nc.name = crv.name;
            if (CurveId{f, c} == replaced) {
                nc.events = events;
            } else {
                for (int k = 0; k < (int)crv.events.size(); ++k)
                    nc.events.push_back({token_of({f, c}, k), crv.events[k].seg});
            }
            nf.curves.push_back(std::move(nc));
        }
        fams.push_back(std::move(nf));
    }
    return finish(fams);
}

} // namespace trisect
