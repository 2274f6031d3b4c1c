#include "critgraph/graph6.hpp"

#include "critgraph/error.hpp"

namespace critgraph {

std::string graph6_encode(const Graph& g)
{
    const int n = g.order();
    if (n > kGraph6MaxOrder)
        throw Error("graph6_encode: order " + std::to_string(n) + " above 62");
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

Graph graph6_decode(std::string_view text)
{
    if (text.empty())
        throw ParseError("graph6: empty input", 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", i);
    }
    const int n = static_cast<unsigned char>(text[0]) - 63;
    if (n > kGraph6MaxOrder)
        throw ParseError("graph6: multi-byte order prefix (n > 62) is not supported", 0);
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t expected = 1 + (bits + 5) / 6;
    if (text.size() != expected)
        throw ParseError("graph6: expected " + std::to_string(expected) + " bytes for order " + std::to_string(n) +
                             ", got " + std::to_string(text.size()),
                         std::min(text.size(), expected));

    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
            if ((byte >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    }
    // Padding bits must be zero.
    if (bits % 6 != 0) {
        const int last = static_cast<unsigned char>(text.back()) - 63;
        if ((last & ((1 << (6 - bits % 6)) - 1)) != 0)
            throw ParseError("graph6: nonzero padding bits", text.size() - 1);
    }
    return g;
}

} // namespace critgraph
