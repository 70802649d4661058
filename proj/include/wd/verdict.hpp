#pragma once

#include "wd/matrix.hpp"

#include <optional>
#include <string>
#include <utility>

namespace wd {

/* three-valued decision with a verifying witness or a re-checkable
   certificate; Unknown carries the reason the search stopped */
struct Verdict {
    enum class Kind { Equivalent, Inequivalent, Unknown };

    Kind kind = Kind::Unknown;
    std::optional<Matrix> witness;
    std::string certificate;
    std::string note;

    bool equivalent() const { return kind == Kind::Equivalent; }
    bool inequivalent() const { return kind == Kind::Inequivalent; }
    bool unknown() const { return kind == Kind::Unknown; }

    static Verdict equivalent_with(Matrix w, std::string cert) {
        Verdict v;
        v.kind = Kind::Equivalent;
        v.witness = std::move(w);
        v.certificate = std::move(cert);
        return v;
    }
    static Verdict inequivalent_because(std::string cert) {
        Verdict v;
        v.kind = Kind::Inequivalent;
        v.certificate = std::move(cert);
        return v;
    }
    static Verdict undecided(std::string why) {
        Verdict v;
        v.kind = Kind::Unknown;
        v.note = std::move(why);
        return v;
    }

    std::string str() const {
        switch (kind) {
            case Kind::Equivalent: return "equivalent (" + certificate + ")";
            case Kind::Inequivalent: return "inequivalent (" + certificate + ")";
            case Kind::Unknown: return "unknown (" + note + ")";
        }
        return "unknown";
    }
};

}
