// verifier.hpp — decides, for any transmission scheme, the three defining
// properties: decentralized encodability (every support fits inside some
// user's side-information window), correctness (every user can decode some
// message outside its side information), and security (no user can decode
// two such messages). Also provides an independent exhaustive cross-check
// over all message realizations for small m.
#pragma once

#include <optional>
#include <vector>

#include "picod/core.hpp"
#include "picod/gf2.hpp"

namespace picod {

struct Transmission {
    // Sorted ascending, 1-based, distinct, non-empty: the messages with
    // coefficient 1 in this GF(2) linear combination.
    std::vector<int> support;
    // Originating user, if pinned by the constructor. When absent, the
    // verifier assigns the smallest user whose side information covers the
    // support.
    std::optional<int> sender;

    explicit Transmission(std::vector<int> support_,
                          std::optional<int> sender_ = std::nullopt);
};

struct Scheme {
    Instance instance;
    std::vector<Transmission> transmissions;

    int length() const { return static_cast<int>(transmissions.size()); }
};

// Generator matrix: one row per transmission, m columns; row t has 1s
// exactly at transmissions[t].support.
gf2::BitMatrix generator(const Scheme& scheme);

struct VerificationReport {
    // decodable[i-1] = D_i, ascending: the messages outside A_i that user i
    // can reconstruct from the transmissions plus its side information.
    std::vector<std::vector<int>> decodable;
    bool decentralized_ok = false;
    bool correct = false;  // every D_i non-empty
    bool secure = false;   // every |D_i| <= 1
    bool valid = false;    // decentralized_ok && correct && secure

    // Present iff correct: assignment[i-1] = d_i, the message served to
    // user i (the unique element of D_i when valid; min(D_i) otherwise).
    std::optional<std::vector<int>> assignment;

    // Per transmission: the resolved sender (the pinned one if given, else
    // the smallest valid user), or nullopt if no user's window covers the
    // support. decentralized_ok iff all entries are present.
    std::vector<std::optional<int>> senders;
};

// D_i for one user: the unit vectors (in complement-column coordinates)
// lying in the row space of the generator projected to complement(i).
std::vector<int> decodable_set(const Scheme& scheme, int i);

VerificationReport verify(const Scheme& scheme);

// Exhaustive cross-check (m <= 12): enumerates all 2^m message tuples and
// marks j decodable by user i iff the value of w_j is constant within every
// class of tuples agreeing on (side information of i, all transmission
// values). Produces a report of the same shape as verify.
VerificationReport brute_force_check(const Scheme& scheme);

}  // namespace picod
