#pragma once

#include "hampack/core.hpp"

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

inline hampack::Word bw(const std::string &s)
{
    return hampack::Word::parse(hampack::SpaceParams(static_cast<int>(s.size()), 2), s);
}

inline hampack::Code bcode(int n, std::initializer_list<const char *> words)
{
    std::vector<hampack::Word> ws;
    for (const char *w : words)
        ws.push_back(hampack::Word::parse(hampack::SpaceParams(n, 2), w));
    return hampack::Code(hampack::SpaceParams(n, 2), ws);
}

inline hampack::Word random_word(std::mt19937_64 &rng, hampack::SpaceParams s)
{
    std::uniform_int_distribution<int> d(0, s.q - 1);
    std::vector<int> sym(static_cast<std::size_t>(s.n));
    for (auto &x : sym)
        x = d(rng);
    return hampack::Word(s, sym);
}

inline std::vector<int> random_permutation(std::mt19937_64 &rng, int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        p[static_cast<std::size_t>(i)] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}
