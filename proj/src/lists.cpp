#include "abchoice/lists.hpp"

#include <algorithm>
#include <iterator>

#include "abchoice/error.hpp"

namespace abchoice {

ColorSet make_color_set(std::vector<Color> colors)
{
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    return colors;
}

ColorSet set_union(const ColorSet& a, const ColorSet& b)
{
    ColorSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ColorSet set_difference(const ColorSet& a, const ColorSet& b)
{
    ColorSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

ColorSet set_intersection(const ColorSet& a, const ColorSet& b)
{
    ColorSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool intersects(const ColorSet& a, const ColorSet& b)
{
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j)
            return true;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return false;
}

bool is_subset(const ColorSet& sub, const ColorSet& super)
{
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

ListAssignment uniform_lists(int n, const ColorSet& colors)
{
    return ListAssignment(static_cast<std::size_t>(n), colors);
}

bool verify_choice(const Graph& g, const ListAssignment& lists, const Choice& choice, int b)
{
    const auto n = static_cast<std::size_t>(g.num_vertices());
    if (lists.size() != n || choice.size() != n)
        return false;
    for (std::size_t v = 0; v < n; ++v) {
        const ColorSet& c = choice[v];
        if (static_cast<int>(c.size()) != b)
            return false;
        if (!std::is_sorted(c.begin(), c.end()) || std::adjacent_find(c.begin(), c.end()) != c.end())
            return false;
        if (!is_subset(c, lists[v]))
            return false;
    }
    for (auto [u, v] : g.edges())
        if (intersects(choice[u], choice[v]))
            return false;
    return true;
}

std::vector<Color> as_coloring(const Choice& choice)
{
    std::vector<Color> out;
    out.reserve(choice.size());
    for (const auto& c : choice) {
        if (c.size() != 1)
            fail(ErrorKind::InvalidInput, "choice is not a single colour per vertex");
        out.push_back(c.front());
    }
    return out;
}

} // namespace abchoice
