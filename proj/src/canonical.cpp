#include "critgraph/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "critgraph/error.hpp"

namespace critgraph {

namespace {

using Partition = std::vector<VertexSet>;
using Certificate = std::vector<std::uint64_t>;

// Split every cell by neighbor counts into every other cell until stable.
// Subcells are ordered by ascending count, so the result depends only on
// the partition structure and never on vertex names.
void refine(const Graph& g, Partition& cells)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size(); ++s) {
            const VertexSet splitter = cells[s];
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (cells[i].size() == 1)
                    continue;
                std::array<VertexSet, kMaxVertices + 1> by_count{};
                int lo = kMaxVertices;
                int hi = 0;
                for (int v : cells[i]) {
                    const int c = (g.neighbors(v) & splitter).size();
                    by_count[c].insert(v);
                    lo = std::min(lo, c);
                    hi = std::max(hi, c);
                }
                if (lo == hi)
                    continue;
                Partition pieces;
                for (int c = lo; c <= hi; ++c)
                    if (!by_count[c].empty())
                        pieces.push_back(by_count[c]);
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i), pieces.begin(), pieces.end());
                i += pieces.size() - 1;
                changed = true;
            }
        }
    }
}

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

class LabelingSearch {
public:
    explicit LabelingSearch(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalLabeling run()
    {
        Partition cells;
        if (n_ > 0)
            cells.push_back(g_.vertices());
        visit(std::move(cells));

        CanonicalLabeling out;
        out.position.assign(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i)
            out.position[best_.labels[i]] = i;
        Graph relabeled(n_);
        for (int i = 0; i < n_; ++i)
            for (int j : VertexSet(best_.cert[i]))
                if (i < j)
                    relabeled.add_edge(i, j);
        out.form = encode_adjacency(relabeled);
        return out;
    }

private:
    struct Leaf {
        std::vector<int> path;
        std::vector<int> labels; // position -> vertex
        Certificate cert;
    };

    void visit(Partition cells)
    {
        refine(g_, cells);
        if (static_cast<int>(cells.size()) == n_) {
            leaf(cells);
            return;
        }
        const int depth = static_cast<int>(path_.size());
        std::size_t target = 0;
        while (cells[target].size() == 1)
            ++target;

        std::vector<int> tried;
        for (int v : cells[target]) {
            if (equivalent_to_tried(v, tried))
                continue;
            Partition child = cells;
            child[target].erase(v);
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), VertexSet{v});
            path_.push_back(v);
            visit(std::move(child));
            path_.pop_back();
            tried.push_back(v);
            if (abort_depth_ >= 0) {
                if (abort_depth_ < depth)
                    return;
                abort_depth_ = -1;
            }
        }
    }

    // Orbits under the automorphisms found so far that fix the current path.
    bool equivalent_to_tried(int v, const std::vector<int>& tried)
    {
        if (tried.empty() || automorphisms_.empty())
            return false;
        UnionFind orbits(n_);
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(path_.begin(), path_.end(), [&](int p) { return gamma[p] == p; });
            if (!fixes)
                continue;
            for (int x = 0; x < n_; ++x)
                orbits.unite(x, gamma[x]);
        }
        const int root = orbits.find(v);
        return std::any_of(tried.begin(), tried.end(), [&](int u) { return orbits.find(u) == root; });
    }

    void leaf(const Partition& cells)
    {
        Leaf current{path_, {}, Certificate(static_cast<std::size_t>(n_), 0)};
        current.labels.reserve(cells.size());
        for (VertexSet c : cells)
            current.labels.push_back(c.front());
        std::vector<int> position(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i)
            position[current.labels[i]] = i;
        for (int i = 0; i < n_; ++i) {
            VertexSet row;
            for (int w : g_.neighbors(current.labels[i]))
                row.insert(position[w]);
            current.cert[i] = row.bits();
        }

        if (!have_first_) {
            first_ = current;
            best_ = current;
            have_first_ = true;
            return;
        }
        if (current.cert == first_.cert) {
            record_automorphism(first_, current);
            abort_depth_ = common_prefix(current.path, first_.path);
            return;
        }
        if (current.cert == best_.cert) {
            record_automorphism(best_, current);
            abort_depth_ = common_prefix(current.path, best_.path);
            return;
        }
        if (current.cert > best_.cert)
            best_ = std::move(current);
    }

    void record_automorphism(const Leaf& from, const Leaf& to)
    {
        std::vector<int> gamma(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i)
            gamma[from.labels[i]] = to.labels[i];
        automorphisms_.push_back(std::move(gamma));
    }

    static int common_prefix(const std::vector<int>& a, const std::vector<int>& b)
    {
        std::size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k])
            ++k;
        return static_cast<int>(k);
    }

    const Graph& g_;
    int n_;
    bool have_first_ = false;
    Leaf first_;
    Leaf best_;
    std::vector<int> path_;
    std::vector<std::vector<int>> automorphisms_;
    int abort_depth_ = -1;
};

} // namespace

std::string CanonicalForm::hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xF]);
    }
    return out;
}

CanonicalForm CanonicalForm::from_hex(const std::string& hex)
{
    if (hex.size() % 2 != 0)
        throw ParseError("odd-length hex string", hex.size());
    auto nibble = [&](std::size_t i) {
        const char c = hex[i];
        if (c >= '0' && c <= '9')
            return c - '0';
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        throw ParseError("invalid hex digit", i);
    };
    CanonicalForm out;
    for (std::size_t i = 0; i < hex.size(); i += 2)
        out.bytes.push_back(static_cast<char>(nibble(i) << 4 | nibble(i + 1)));
    return out;
}

CanonicalForm encode_adjacency(const Graph& g)
{
    const int n = g.order();
    CanonicalForm out;
    out.bytes.push_back(static_cast<char>(n));
    unsigned char acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = static_cast<unsigned char>(acc << 1 | (g.adjacent(i, j) ? 1 : 0));
            if (++filled == 8) {
                out.bytes.push_back(static_cast<char>(acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.bytes.push_back(static_cast<char>(acc << (8 - filled)));
    return out;
}

Graph graph_from_canonical(const CanonicalForm& form)
{
    if (form.bytes.empty())
        throw ParseError("empty canonical form", 0);
    const int n = static_cast<unsigned char>(form.bytes[0]);
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    if (n > kMaxVertices || form.bytes.size() != 1 + (bits + 7) / 8)
        throw ParseError("canonical form length does not match its order", form.bytes.size());
    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const auto byte = static_cast<unsigned char>(form.bytes[1 + k / 8]);
            if ((byte >> (7 - k % 8)) & 1U)
                g.add_edge(i, j);
        }
    }
    return g;
}

CanonicalLabeling canonical_labeling(const Graph& g, int cap)
{
    if (g.order() > cap)
        throw CapExceeded("canonical form: order " + std::to_string(g.order()) + " exceeds cap " +
                          std::to_string(cap));
    return LabelingSearch(g).run();
}

CanonicalForm canonical_form(const Graph& g, int cap)
{
    return canonical_labeling(g, cap).form;
}

bool is_isomorphic(const Graph& g, const Graph& h, int cap)
{
    if (g.order() > cap || h.order() > cap)
        throw CapExceeded("is_isomorphic: order exceeds cap " + std::to_string(cap));
    if (g.order() != h.order() || g.size() != h.size())
        return false;
    auto dg = g.degrees();
    auto dh = h.degrees();
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh)
        return false;
    return canonical_form(g, cap) == canonical_form(h, cap);
}

} // namespace critgraph
