#include "distcol/automorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

namespace distcol {

bool is_automorphism(const Graph& g, const Permutation& p) {
    if (p.size() != g.vertex_count()) throw SizeMismatchError("permutation size != vertex count");
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != g.adjacent(p(u), p(v))) return false;
    return true;
}

bool preserves_vertex_colouring(const Permutation& p, const VertexColouring& c) {
    if (p.size() != c.size()) throw SizeMismatchError("permutation size != colouring size");
    for (int v = 0; v < p.size(); ++v)
        if (c.colours[p(v)] != c.colours[v]) return false;
    return true;
}

bool preserves_edge_colouring(const Permutation& p, const Graph& g, const EdgeColouring& c) {
    if (p.size() != g.vertex_count()) throw SizeMismatchError("permutation size != vertex count");
    if (c.size() != g.edge_count()) throw SizeMismatchError("edge colouring size != edge count");
    if (!is_automorphism(g, p)) throw NotAutomorphismError("permutation is not an automorphism");
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        int j = *g.edge_index(p(e.u), p(e.v));
        if (c.colours[j] != c.colours[i]) return false;
    }
    return true;
}

namespace {

// Remap colour values to 0..k-1; only equality of colours matters here.
std::vector<int> dense_copy(const std::vector<Colour>& colours) {
    std::map<Colour, int> ids;
    for (Colour c : colours) ids.emplace(c, 0);
    int next = 0;
    for (auto& [c, id] : ids) id = next++;
    std::vector<int> out(colours.size());
    for (std::size_t i = 0; i < colours.size(); ++i) out[i] = ids[colours[i]];
    return out;
}

// Backtracker over vertex images with paired individualization-refinement.
// Source and target labels are refined jointly, so a branch is cut as soon
// as the two sides' cell structures disagree.
class PreservingSearch {
  public:
    explicit PreservingSearch(const AutQuery& q) : g_(q.graph), n_(q.graph.vertex_count()) {
        base_.assign(n_, 0);
        if (q.vertex_constraint) {
            if (q.vertex_constraint->size() != n_)
                throw SizeMismatchError("vertex constraint size != vertex count");
            base_ = dense_copy(q.vertex_constraint->colours);
        }
        if (q.edge_constraint) {
            if (q.edge_constraint->size() != g_.edge_count())
                throw SizeMismatchError("edge constraint size != edge count");
            ecol_ = dense_copy(q.edge_constraint->colours);
            has_ec_ = true;
        }
        image_.assign(n_, -1);
        preimage_.assign(n_, -1);
    }

    // Non-identity witnesses are partitioned by their smallest moved vertex:
    // fix 0..first-1 pointwise, map `first` strictly upward, then extend.
    std::optional<Permutation> run() {
        for (int first = 0; first < n_; ++first) {
            auto cells = refine();
            if (!cells) return std::nullopt;  // nothing fixes 0..first-1 pointwise
            for (int w = first + 1; w < n_; ++w) {
                if ((*cells)[first] != (*cells)[n_ + w]) continue;
                if (!compatible(first, w)) continue;
                assign(first, w);
                if (extend(0)) return Permutation(image_);
                unassign(first, w);
            }
            assign(first, first);
        }
        return std::nullopt;
    }

  private:
    bool extend(int from) {
        int v = -1;
        for (int u = from; u < n_; ++u)
            if (image_[u] < 0) {
                v = u;
                break;
            }
        if (v < 0) return true;  // complete; adjacency held at every step
        auto cells = refine();
        if (!cells) return false;
        for (int w = 0; w < n_; ++w) {
            if (preimage_[w] >= 0) continue;
            if ((*cells)[v] != (*cells)[n_ + w]) continue;
            if (!compatible(v, w)) continue;
            assign(v, w);
            if (extend(v + 1)) return true;
            unassign(v, w);
        }
        return false;
    }

    // Adjacency and constraint checks of the candidate pair v -> w against
    // every already-assigned pair.
    bool compatible(int v, int w) const {
        if (!base_.empty() && base_[v] != base_[w]) return false;
        for (int u = 0; u < n_; ++u) {
            int x = image_[u];
            if (x < 0) continue;
            if (g_.adjacent(u, v) != g_.adjacent(x, w)) return false;
            if (has_ec_ && g_.adjacent(u, v)) {
                if (ecol_[*g_.edge_index(u, v)] != ecol_[*g_.edge_index(x, w)]) return false;
            }
        }
        return true;
    }

    void assign(int v, int w) {
        image_[v] = w;
        preimage_[w] = v;
    }
    void unassign(int v, int w) {
        image_[v] = -1;
        preimage_[w] = -1;
    }

    // Joint equitable refinement of source labels (entries 0..n-1) and target
    // labels (entries n..2n-1). Assigned vertices are individualized with a
    // mark shared by the two sides of their pair. Returns nullopt when the
    // sides' label histograms disagree or an assigned pair lands in
    // different cells — no extension of the partial map exists then.
    std::optional<std::vector<int>> refine() const {
        constexpr std::int64_t kMark = std::int64_t{1} << 32;
        std::vector<std::int64_t> label(2 * n_);
        for (int v = 0; v < n_; ++v) {
            label[v] = image_[v] >= 0 ? kMark + v : base_[v];
            label[n_ + v] = preimage_[v] >= 0 ? kMark + preimage_[v] : base_[v];
        }
        std::vector<int> out(2 * n_);
        int classes = 0;
        for (int round = 0; round <= 2 * n_; ++round) {
            std::map<std::vector<std::int64_t>, int> rank;
            std::vector<std::vector<std::int64_t>> sigs(2 * n_);
            for (int side = 0; side < 2; ++side) {
                for (int v = 0; v < n_; ++v) {
                    int i = side * n_ + v;
                    std::vector<std::int64_t>& sig = sigs[i];
                    sig.push_back(label[i]);
                    std::vector<std::int64_t> nb;
                    nb.reserve(g_.neighbours(v).size());
                    for (int u : g_.neighbours(v)) {
                        std::int64_t entry = label[side * n_ + u] << 16;
                        if (has_ec_) entry += ecol_[*g_.edge_index(u, v)];
                        nb.push_back(entry);
                    }
                    std::sort(nb.begin(), nb.end());
                    sig.insert(sig.end(), nb.begin(), nb.end());
                    rank.emplace(sig, 0);
                }
            }
            int next = 0;
            for (auto& [sig, r] : rank) r = next++;
            for (int i = 0; i < 2 * n_; ++i) out[i] = rank[sigs[i]];
            if (next == classes) break;  // no cell split anywhere
            classes = next;
            for (int i = 0; i < 2 * n_; ++i) label[i] = out[i];
        }
        std::vector<int> src_hist(classes, 0), tgt_hist(classes, 0);
        for (int v = 0; v < n_; ++v) {
            ++src_hist[out[v]];
            ++tgt_hist[out[n_ + v]];
        }
        if (src_hist != tgt_hist) return std::nullopt;
        for (int v = 0; v < n_; ++v)
            if (image_[v] >= 0 && out[v] != out[n_ + image_[v]]) return std::nullopt;
        return out;
    }

    const Graph& g_;
    int n_;
    std::vector<int> base_;
    std::vector<int> ecol_;
    bool has_ec_ = false;
    std::vector<int> image_;
    std::vector<int> preimage_;
};

}  // namespace

std::optional<Permutation> find_nontrivial_preserving(const AutQuery& q) {
    PreservingSearch search(q);
    auto result = search.run();
    if (result) {
        // a returned witness always satisfies the public predicates
        if (!is_automorphism(q.graph, *result) || result->is_identity())
            throw Error("internal: search returned an invalid witness");
        if (q.vertex_constraint && !preserves_vertex_colouring(*result, *q.vertex_constraint))
            throw Error("internal: witness breaks the vertex constraint");
        if (q.edge_constraint && !preserves_edge_colouring(*result, q.graph, *q.edge_constraint))
            throw Error("internal: witness breaks the edge constraint");
    }
    return result;
}

std::vector<Permutation> all_automorphisms_bruteforce(const Graph& g) {
    int n = g.vertex_count();
    if (n > 8) throw TooLargeForOracleError("brute-force enumeration limited to n <= 8");
    std::vector<int> images(n);
    for (int v = 0; v < n; ++v) images[v] = v;
    std::vector<Permutation> out;
    do {
        Permutation p(images);
        if (is_automorphism(g, p)) out.push_back(std::move(p));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace distcol
