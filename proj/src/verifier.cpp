#include "picod/verifier.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace picod {

Transmission::Transmission(std::vector<int> support_,
                           std::optional<int> sender_)
    : support(std::move(support_)), sender(sender_) {
    if (support.empty())
        throw input_error("transmission: empty support");
    std::sort(support.begin(), support.end());
    if (std::adjacent_find(support.begin(), support.end()) != support.end())
        throw input_error("transmission: duplicate message index");
    if (support.front() < 1)
        throw input_error("transmission: message index out of range");
}

gf2::BitMatrix generator(const Scheme& scheme) {
    gf2::BitMatrix g(scheme.instance.m);
    for (const Transmission& t : scheme.transmissions) {
        gf2::BitVec row(scheme.instance.m);
        for (int j : t.support) {
            if (j > scheme.instance.m)
                throw input_error("transmission: message index exceeds m");
            row.set(j);
        }
        g.add_row(row);
    }
    return g;
}

namespace {

bool support_fits_user(const Instance& inst, const std::vector<int>& support,
                       int user) {
    // Side information of `user` is the circular run of s indices ending at
    // `user`: j belongs iff (user - j) mod m lies in [0, s-1], i.e. iff
    // mod1(user - j) is m (j == user) or below s.
    for (int j : support) {
        int d = mod1(user - j, inst.m);
        if (d >= inst.s && d < inst.m) return false;
    }
    return true;
}

std::optional<int> smallest_valid_sender(const Instance& inst,
                                         const std::vector<int>& support) {
    for (int u = 1; u <= inst.m; ++u)
        if (support_fits_user(inst, support, u)) return u;
    return std::nullopt;
}

std::vector<std::optional<int>> resolve_senders(const Scheme& scheme,
                                                bool& all_ok) {
    std::vector<std::optional<int>> out;
    all_ok = true;
    for (const Transmission& t : scheme.transmissions) {
        std::optional<int> resolved;
        if (t.sender) {
            if (*t.sender >= 1 && *t.sender <= scheme.instance.m &&
                support_fits_user(scheme.instance, t.support, *t.sender))
                resolved = *t.sender;
        } else {
            resolved = smallest_valid_sender(scheme.instance, t.support);
        }
        if (!resolved) all_ok = false;
        out.push_back(resolved);
    }
    return out;
}

VerificationReport finish_report(const Scheme& scheme,
                                 std::vector<std::vector<int>> decodable) {
    VerificationReport rep;
    rep.decodable = std::move(decodable);
    rep.senders = resolve_senders(scheme, rep.decentralized_ok);
    rep.correct = true;
    rep.secure = true;
    for (const auto& d : rep.decodable) {
        if (d.empty()) rep.correct = false;
        if (d.size() > 1) rep.secure = false;
    }
    rep.valid = rep.decentralized_ok && rep.correct && rep.secure;
    if (rep.correct) {
        std::vector<int> assignment;
        assignment.reserve(rep.decodable.size());
        for (const auto& d : rep.decodable) assignment.push_back(d.front());
        rep.assignment = std::move(assignment);
    }
    return rep;
}

}  // namespace

std::vector<int> decodable_set(const Scheme& scheme, int i) {
    const std::vector<int> comp = complement(scheme.instance, i);
    gf2::BitMatrix projected = project(generator(scheme), comp);
    std::vector<int> out;
    for (int k : gf2::unit_rows_in_span(projected))
        out.push_back(comp[static_cast<std::size_t>(k) - 1]);
    std::sort(out.begin(), out.end());
    return out;
}

VerificationReport verify(const Scheme& scheme) {
    std::vector<std::vector<int>> decodable;
    decodable.reserve(static_cast<std::size_t>(scheme.instance.m));
    for (int i = 1; i <= scheme.instance.m; ++i)
        decodable.push_back(decodable_set(scheme, i));
    return finish_report(scheme, std::move(decodable));
}

VerificationReport brute_force_check(const Scheme& scheme) {
    const Instance& inst = scheme.instance;
    if (inst.m > 12)
        throw capacity_error("brute_force_check: m exceeds the 2^m guard");
    generator(scheme);  // index-range validation

    const std::uint32_t tuple_count = 1u << inst.m;
    std::vector<std::uint32_t> tx_masks;
    for (const Transmission& t : scheme.transmissions) {
        std::uint32_t mask = 0;
        for (int j : t.support) mask |= 1u << (j - 1);
        tx_masks.push_back(mask);
    }

    std::vector<std::vector<int>> decodable;
    for (int i = 1; i <= inst.m; ++i) {
        std::uint32_t side_mask = 0;
        for (int j : side_info(inst, i)) side_mask |= 1u << (j - 1);

        // Tuples are grouped by everything user i observes: its side
        // information values and all transmission values. A message is
        // decodable iff its bit never varies within any group.
        std::unordered_map<std::uint64_t, std::uint32_t> first_in_group;
        std::uint32_t varies = 0;
        for (std::uint32_t x = 0; x < tuple_count; ++x) {
            std::uint64_t key = x & side_mask;
            for (std::size_t t = 0; t < tx_masks.size(); ++t) {
                key <<= 1;
                key |= static_cast<std::uint64_t>(
                    std::popcount(x & tx_masks[t]) & 1);
            }
            auto [it, inserted] = first_in_group.try_emplace(key, x);
            if (!inserted) varies |= x ^ it->second;
        }

        std::vector<int> d;
        for (int j : complement(inst, i))
            if (!(varies & (1u << (j - 1)))) d.push_back(j);
        std::sort(d.begin(), d.end());
        decodable.push_back(std::move(d));
    }
    return finish_report(scheme, std::move(decodable));
}

}  // namespace picod
