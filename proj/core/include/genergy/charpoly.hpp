#pragma once

#include <optional>

#include "genergy/graph.hpp"
#include "genergy/intpoly.hpp"

namespace genergy {

/// Characteristic polynomials by independent routes. The recurrences are
/// the production path; charpoly_general is the determinant-based oracle
/// (O(n^4) big-integer work, meant for n up to ~32).

IntPoly charpoly_path(int n);   // phi(P_1)=x, phi(P_2)=x^2-1, phi(P_n)=x phi(P_{n-1})-phi(P_{n-2})
IntPoly charpoly_p6(int n);     // seeded at n=7,8; same three-term recurrence
IntPoly charpoly_cycle(int n);  // phi(C_n) = phi(P_n) - phi(P_{n-2}) - 2

/// Faddeev-LeVerrier over arbitrary-precision integers.
IntPoly charpoly_general(const Graph& g);

/// Edge-deletion expansion phi(G) = phi(G-uv) - phi(G-u-v) - 2 sum_C phi(G-C),
/// applied at `edge` and recursing with the pendant rule
/// phi(G) = x phi(G-v) - phi(G-u-v) until everything is a forest.
/// Accepts trees and unicyclic graphs only.
IntPoly charpoly_deletion(const Graph& g, std::pair<int, int> edge);

/// k-matching counts m(T,k), k = 0..floor(n/2), of a forest (tree DP,
/// state = matched-to-parent flag, components rooted at their smallest
/// vertex).
std::vector<mpz_class> matching_numbers(const Graph& forest);

/// phi of a forest via phi(T) = sum_k (-1)^k m(T,k) x^(n-2k).
IntPoly charpoly_forest(const Graph& forest);

/// Exact charpoly of a forest or unicyclic graph through the matching
/// transform plus one cycle-edge deletion; O(n^2) and valid at any order.
IntPoly charpoly_unicyclic(const Graph& g);

enum class Order { Less, Greater, Equal, Incomparable };

struct QuasiOrderResult {
    Order verdict;
    std::optional<int> witness_less;     // index k with b1[k] < b2[k]
    std::optional<int> witness_greater;  // index k with b1[k] > b2[k]
};

/// Componentwise comparison of b-coefficient vectors (shorter list padded
/// with zeros).
QuasiOrderResult quasi_order_compare(const std::vector<mpz_class>& b1,
                                     const std::vector<mpz_class>& b2);

const char* to_string(Order o);

}
