#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "mpoly.hpp"
#include "partition.hpp"
#include "tableau.hpp"

namespace hooklab {

inline bool move_allowed(const Diagram& d, Box c)
{
    return d.contains(c) && !d.contains(c.south()) && !d.contains(c.east()) &&
           !d.contains(c.southeast());
}

/// Replaces c by its southeastern neighbour.
inline Diagram excited_move(const Diagram& d, Box c)
{
    if (!d.contains(c))
        throw move_blocked("box is not in the diagram");
    if (!move_allowed(d, c))
        throw move_blocked("a south, east or southeast neighbour is present");
    Diagram r = d;
    r.erase(c);
    r.insert(c.southeast());
    return r;
}

/// E(lambda/mu): closure of Y(mu) under excited moves that stay in Y(lambda).
/// Sorted by the canonical box list.
inline std::vector<Diagram> enumerate_excitations(const Partition& lambda, const Partition& mu)
{
    if (!contains(lambda, mu))
        return {};
    std::set<Diagram> seen;
    std::deque<const Diagram*> queue;
    queue.push_back(&*seen.insert(young_diagram(mu)).first);
    while (!queue.empty()) {
        const Diagram& d = *queue.front();
        queue.pop_front();
        for (Box c : d) {
            if (!in_shape(lambda, c.southeast()) || !move_allowed(d, c))
                continue;
            Diagram next = d;
            next.erase(c);
            next.insert(c.southeast());
            auto [it, fresh] = seen.insert(std::move(next));
            if (fresh)
                queue.push_back(&*it);
        }
    }
    return {seen.begin(), seen.end()};
}

/// D(T) = {(T(i,j), T(i,j) + j - i)} for T semistandard of straight shape.
inline Diagram excitation_of_tableau(const Tableau& t)
{
    if (!t.inner().empty() || !is_semistandard(t))
        throw not_semistandard("excitation map needs a semistandard tableau of straight shape");
    std::vector<Box> boxes;
    for (Box c : t.cells()) {
        const int v = t.at(c);
        boxes.push_back({v, v + c.content()});
    }
    return Diagram(std::move(boxes));
}

/// Inverse of excitation_of_tableau: on each diagonal, the boxes of Y(mu)
/// and of E are matched in order of rows and T records the matched row.
inline Tableau tableau_of_excitation(const Diagram& e, const Partition& mu)
{
    std::map<int, std::vector<int>> rows_of_e;
    for (Box c : e)
        rows_of_e[c.content()].push_back(c.row);
    std::map<int, std::vector<Box>> cells_of_mu;
    for (Box c : young_diagram(mu))
        cells_of_mu[c.content()].push_back(c);

    if (e.size() != static_cast<std::size_t>(mu.size()))
        throw not_an_excitation("box count differs from |mu|");
    Tableau t(mu, Partition{});
    for (auto& [d, cells] : cells_of_mu) {
        auto it = rows_of_e.find(d);
        if (it == rows_of_e.end() || it->second.size() != cells.size())
            throw not_an_excitation("diagonal " + std::to_string(d) + " has the wrong box count");
        // Both lists are already in increasing row order.
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (it->second[k] < 1)
                throw not_an_excitation("box above the first row");
            t.set(cells[k], it->second[k]);
        }
    }
    if (!is_semistandard(t))
        throw not_an_excitation("diagonal matching is not semistandard");
    return t;
}

inline MPoly box_weight(Box c) { return MPoly::x(c.row) + MPoly::y(c.col); }

/// prod over boxes (i,j) of (x_i + y_j).
inline MPoly excitation_weight(const Diagram& e)
{
    MPoly w = 1;
    for (Box c : e) {
        if (c.row < 1 || c.col < 1)
            throw nonpositive_box("excitation weight needs positive boxes");
        w *= box_weight(c);
    }
    return w;
}

/// prod over (i,j) in Y(mu) of (x_{T(i,j)} + y_{T(i,j)+j-i}).
inline MPoly tableau_weight(const Tableau& t)
{
    MPoly w = 1;
    for (Box c : t.cells()) {
        const int v = t.at(c);
        w *= MPoly::x(v) + MPoly::y(v + c.content());
    }
    return w;
}

/// The linear factors (x_i + y_j) of excitation_weight as sorted (i, j) pairs.
/// Polynomial rings are factorial, so two such products agree iff these lists do.
inline std::vector<std::pair<int, int>> weight_factors(const Diagram& e)
{
    std::vector<std::pair<int, int>> f;
    for (Box c : e)
        f.emplace_back(c.row, c.col);
    return f;  // Diagram iterates in sorted order
}

inline std::vector<std::pair<int, int>> weight_factors(const Tableau& t)
{
    std::vector<std::pair<int, int>> f;
    for (Box c : t.cells())
        f.emplace_back(t.at(c), t.at(c) + c.content());
    std::sort(f.begin(), f.end());
    return f;
}

} // namespace hooklab
