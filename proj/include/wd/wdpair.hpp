#pragma once

#include "wd/group.hpp"
#include "wd/rep.hpp"

#include <string>

namespace wd {

/* (s, N, q) with s the image of an arithmetic Frobenius lift, N the
   monodromy operator, q the residue-field size */
struct WDPair {
    GroupSpec group;
    Matrix s;
    Matrix N;
    Rational q;

    WDPair lift(const FieldPtr& K2) const;
};

struct PairReport {
    bool sizes_ok = false;
    bool q_ok = false;
    bool s_in_group = false;
    bool n_in_lie = false;
    bool twist_ok = false;
    bool n_nilpotent = false;

    bool ok() const {
        return sizes_ok && q_ok && s_in_group && n_in_lie && twist_ok && n_nilpotent;
    }
    std::string str() const;
};

PairReport validate_pair(const WDPair& p);

/* s semisimple; pairs failing validate_pair are rejected */
bool is_urfs(const WDPair& p);

/* replace s by its semisimple factor, keeping N and q */
WDPair semisimplify(const WDPair& p);

WDPair pushforward(const WDPair& p, const Rep& r);

WDPair rescale_nilpotent(const WDPair& p, const FieldElement& a);

WDPair apply_conjugation(const WDPair& p, const Matrix& g);

}
