#include "wd/serialize.hpp"

#include "wd/error.hpp"

namespace wd {

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object())
        throw ParseError(std::string("expected an object carrying '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
    return *it;
}

std::string need_string(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string("expected a string for ") + what);
    return j.get<std::string>();
}

long need_integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string("expected an integer for ") + what);
    return j.get<long>();
}

const Json& need_list(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string("expected an array for ") + what);
    return j;
}

}  // namespace

Json rational_json(const Rational& r) { return rat_to_string(r); }

Json element_json(const FieldElement& x) {
    Json out = Json::array();
    for (const auto& c : x.coords()) out.push_back(rat_to_string(c));
    return out;
}

Json matrix_json(const Matrix& m) {
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(element_json(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

Json field_json(const FieldPtr& K) {
    if (!K) throw ParseError("null field");
    Json out;
    Json f = Json::array();
    for (const auto& c : K->minpoly()) f.push_back(rat_to_string(c));
    out["minpoly"] = std::move(f);
    if (K->embedding()) {
        const Rect& r = *K->embedding();
        out["embedding"] = Json::array({rat_to_string(r.re_lo), rat_to_string(r.re_hi),
                                        rat_to_string(r.im_lo), rat_to_string(r.im_hi)});
    }
    return out;
}

Json group_json(const GroupSpec& g) {
    Json out;
    switch (g.kind()) {
        case GroupKind::GL:
            out["variant"] = "gl";
            out["n"] = g.dim();
            break;
        case GroupKind::SL:
            out["variant"] = "sl";
            out["n"] = g.dim();
            break;
        case GroupKind::Sp:
            out["variant"] = "sp";
            out["n"] = g.dim();
            out["form"] = matrix_json(g.form());
            break;
        case GroupKind::SO:
            out["variant"] = "so";
            out["n"] = g.dim();
            out["form"] = matrix_json(g.form());
            break;
        case GroupKind::O:
            out["variant"] = "o";
            out["n"] = g.dim();
            out["form"] = matrix_json(g.form());
            break;
        case GroupKind::Product: {
            out["variant"] = "product";
            out["n"] = g.dim();
            Json fs = Json::array();
            for (const auto& f : g.factors()) fs.push_back(group_json(f));
            out["factors"] = std::move(fs);
            break;
        }
        case GroupKind::TensorStabilizer: {
            out["variant"] = "tensor-stabilizer";
            out["n"] = g.dim();
            Json ts = Json::array();
            for (const auto& t : g.tensors()) {
                Json d;
                d["shape"] = t.shape;
                Json es = Json::array();
                for (const auto& e : t.entries) es.push_back(element_json(e));
                d["entries"] = std::move(es);
                ts.push_back(std::move(d));
            }
            out["tensors"] = std::move(ts);
            break;
        }
    }
    return out;
}

Json pair_json(const WDPair& p) {
    Json out;
    out["field"] = field_json(p.group.field());
    out["group"] = group_json(p.group);
    out["s"] = matrix_json(p.s);
    out["N"] = matrix_json(p.N);
    out["q"] = rational_json(p.q);
    return out;
}

Json presentation_json(const TamePresentation& t) {
    Json out;
    out["field"] = field_json(t.group.field());
    out["group"] = group_json(t.group);
    out["sigma"] = matrix_json(t.sigma);
    out["gamma"] = matrix_json(t.gamma);
    out["q"] = rational_json(t.q);
    return out;
}

Json log_module_json(const LogModule& m) {
    Json out;
    out["field"] = field_json(m.field());
    out["p"] = m.p;
    out["order"] = m.order;
    for (const char* key : {"A", "Phi"}) {
        const USeries& s = (key[0] == 'A') ? m.A : m.Phi;
        int n = m.dim();
        Json mat = Json::array();
        for (int i = 0; i < n; ++i) {
            Json row = Json::array();
            for (int j = 0; j < n; ++j) {
                Json coeffs = Json::array();
                for (int k = 0; k < m.order; ++k)
                    coeffs.push_back(element_json(s[static_cast<std::size_t>(k)].at(i, j)));
                row.push_back(std::move(coeffs));
            }
            mat.push_back(std::move(row));
        }
        out[key] = std::move(mat);
    }
    return out;
}

Json phi_n_json(const PhiNModule& m) {
    Json out;
    out["field"] = field_json(m.phi0.field());
    out["p"] = m.p;
    out["phi0"] = matrix_json(m.phi0);
    out["N"] = matrix_json(m.N);
    return out;
}

Json finite_image_json(const FiniteImagePair& f) {
    Json out;
    out["field"] = field_json(f.group.field());
    out["group"] = group_json(f.group);
    Json gens = Json::array();
    for (const auto& g : f.generators) gens.push_back(matrix_json(g));
    out["generators"] = std::move(gens);
    Json rels = Json::array();
    for (const auto& w : f.relations) rels.push_back(w);
    out["relations"] = std::move(rels);
    return out;
}

Json invariant_json(const ChainInvariant& inv) {
    Json chains = Json::array();
    for (const auto& c : inv.chains) {
        Json jc;
        jc["base"] = element_json(c.base);
        jc["dims"] = c.eigen_dims;
        Json strands = Json::array();
        for (const auto& [span, count] : c.intervals) {
            Json s;
            s["from"] = span.first;
            s["to"] = span.second;
            s["count"] = count;
            strands.push_back(std::move(s));
        }
        jc["strands"] = std::move(strands);
        chains.push_back(std::move(jc));
    }
    Json out;
    out["chains"] = std::move(chains);
    return out;
}

Json verdict_json(const Verdict& v) {
    Json out;
    switch (v.kind) {
        case Verdict::Kind::Equivalent: out["kind"] = "equivalent"; break;
        case Verdict::Kind::Inequivalent: out["kind"] = "inequivalent"; break;
        case Verdict::Kind::Unknown: out["kind"] = "unknown"; break;
    }
    out["certificate"] = v.certificate;
    out["note"] = v.note;
    if (v.witness) {
        Json w;
        w["field"] = field_json(v.witness->field());
        w["matrix"] = matrix_json(*v.witness);
        out["witness"] = std::move(w);
    }
    return out;
}

Rational rational_from_json(const Json& j) {
    return rat_from_string(need_string(j, "a rational"));
}

FieldPtr field_from_json(const Json& j) {
    const Json& mp = need_list(need(j, "minpoly"), "the minimal polynomial");
    std::vector<Rational> f;
    for (const auto& c : mp) f.push_back(rat_from_string(need_string(c, "a coefficient")));
    if (f.size() < 2) throw ParseError("minimal polynomial must have degree at least 1");
    if (f.size() == 2) {
        if (f[0] != 0 || f[1] != 1)
            throw ParseError("a degree-one field must be given by the polynomial x");
        if (j.contains("embedding"))
            throw ParseError("the rational field takes no embedding rectangle");
        return NumberField::rationals();
    }
    std::optional<Rect> rect;
    if (j.contains("embedding")) {
        const Json& e = need_list(j.at("embedding"), "the embedding rectangle");
        if (e.size() != 4) throw ParseError("embedding rectangle needs 4 corners");
        rect = Rect{rat_from_string(need_string(e[0], "a corner")),
                    rat_from_string(need_string(e[1], "a corner")),
                    rat_from_string(need_string(e[2], "a corner")),
                    rat_from_string(need_string(e[3], "a corner"))};
    }
    return NumberField::create(std::move(f), rect);
}

FieldElement element_from_json(const Json& j, const FieldPtr& K) {
    const Json& a = need_list(j, "a field element");
    if (static_cast<int>(a.size()) != K->degree())
        throw ParseError("field element has " + std::to_string(a.size()) +
                         " coordinates, field degree is " + std::to_string(K->degree()));
    std::vector<Rational> coords;
    for (const auto& c : a) coords.push_back(rat_from_string(need_string(c, "a coordinate")));
    return FieldElement(K, std::move(coords));
}

Matrix matrix_from_json(const Json& j, const FieldPtr& K) {
    const Json& rows = need_list(j, "a matrix");
    if (rows.empty()) throw ParseError("empty matrix");
    std::vector<std::vector<FieldElement>> data;
    for (const auto& r : rows) {
        const Json& row = need_list(r, "a matrix row");
        if (row.empty()) throw ParseError("empty matrix row");
        std::vector<FieldElement> entries;
        for (const auto& e : row) entries.push_back(element_from_json(e, K));
        if (!data.empty() && entries.size() != data.front().size())
            throw ParseError("ragged matrix rows");
        data.push_back(std::move(entries));
    }
    return Matrix::from_rows(K, data);
}

GroupSpec group_from_json(const Json& j, const FieldPtr& K) {
    std::string variant = need_string(need(j, "variant"), "the group variant");
    auto check_n = [&](const GroupSpec& g) {
        if (j.contains("n") && need_integer(j.at("n"), "the group dimension") != g.dim())
            throw ParseError("group dimension does not match its data");
        return g;
    };
    if (variant == "gl" || variant == "sl") {
        long n = need_integer(need(j, "n"), "the group dimension");
        if (n < 1) throw ParseError("group dimension must be positive");
        return variant == "gl" ? GroupSpec::gl(K, static_cast<int>(n))
                               : GroupSpec::sl(K, static_cast<int>(n));
    }
    if (variant == "sp") return check_n(GroupSpec::sp(matrix_from_json(need(j, "form"), K)));
    if (variant == "so") return check_n(GroupSpec::so(matrix_from_json(need(j, "form"), K)));
    if (variant == "o")
        return check_n(GroupSpec::orthogonal(matrix_from_json(need(j, "form"), K)));
    if (variant == "product") {
        std::vector<GroupSpec> factors;
        for (const auto& f : need_list(need(j, "factors"), "the product factors"))
            factors.push_back(group_from_json(f, K));
        if (factors.empty()) throw ParseError("empty product");
        return check_n(GroupSpec::product(std::move(factors)));
    }
    if (variant == "tensor-stabilizer") {
        long n = need_integer(need(j, "n"), "the group dimension");
        if (n < 1) throw ParseError("group dimension must be positive");
        std::vector<TensorDatum> tensors;
        for (const auto& t : need_list(need(j, "tensors"), "the tensor list")) {
            TensorDatum d;
            d.shape = need_string(need(t, "shape"), "the tensor shape");
            for (const auto& e : need_list(need(t, "entries"), "the tensor entries"))
                d.entries.push_back(element_from_json(e, K));
            tensors.push_back(std::move(d));
        }
        return GroupSpec::tensor_stabilizer(K, static_cast<int>(n), std::move(tensors));
    }
    throw ParseError("unknown group variant '" + variant + "'");
}

WDPair pair_from_json(const Json& j) {
    FieldPtr K = field_from_json(need(j, "field"));
    GroupSpec g = group_from_json(need(j, "group"), K);
    Matrix s = matrix_from_json(need(j, "s"), K);
    Matrix N = matrix_from_json(need(j, "N"), K);
    if (s.rows() != g.dim() || !s.square() || N.rows() != g.dim() || !N.square())
        throw ParseError("matrix size does not match the group");
    return WDPair{std::move(g), std::move(s), std::move(N), rational_from_json(need(j, "q"))};
}

TamePresentation presentation_from_json(const Json& j) {
    FieldPtr K = field_from_json(need(j, "field"));
    GroupSpec g = group_from_json(need(j, "group"), K);
    Matrix sigma = matrix_from_json(need(j, "sigma"), K);
    Matrix gamma = matrix_from_json(need(j, "gamma"), K);
    if (sigma.rows() != g.dim() || !sigma.square() || gamma.rows() != g.dim() || !gamma.square())
        throw ParseError("matrix size does not match the group");
    return TamePresentation{std::move(g), std::move(sigma), std::move(gamma),
                            rational_from_json(need(j, "q"))};
}

LogModule log_module_from_json(const Json& j) {
    FieldPtr K = field_from_json(need(j, "field"));
    LogModule m;
    m.p = need_integer(need(j, "p"), "the prime");
    long order = need_integer(need(j, "order"), "the truncation order");
    if (order < 1) throw ParseError("truncation order must be positive");
    m.order = static_cast<int>(order);
    for (const char* key : {"A", "Phi"}) {
        const Json& mat = need_list(need(j, key), "a series matrix");
        int n = static_cast<int>(mat.size());
        if (n == 0) throw ParseError("empty series matrix");
        USeries series(static_cast<std::size_t>(m.order), Matrix::zero(K, n, n));
        for (int i = 0; i < n; ++i) {
            const Json& row = need_list(mat[static_cast<std::size_t>(i)], "a series row");
            if (static_cast<int>(row.size()) != n) throw ParseError("series matrix must be square");
            for (int jj = 0; jj < n; ++jj) {
                const Json& coeffs = need_list(row[static_cast<std::size_t>(jj)],
                                               "a coefficient list");
                if (static_cast<int>(coeffs.size()) != m.order)
                    throw ParseError("coefficient list length must equal the order");
                for (int k = 0; k < m.order; ++k)
                    series[static_cast<std::size_t>(k)].at(i, jj) =
                        element_from_json(coeffs[static_cast<std::size_t>(k)], K);
            }
        }
        (key[0] == 'A' ? m.A : m.Phi) = std::move(series);
    }
    return m;
}

PhiNModule phi_n_from_json(const Json& j) {
    FieldPtr K = field_from_json(need(j, "field"));
    PhiNModule m{need_integer(need(j, "p"), "the prime"),
                 matrix_from_json(need(j, "phi0"), K), matrix_from_json(need(j, "N"), K)};
    if (!m.phi0.square() || !m.N.square() || m.phi0.rows() != m.N.rows())
        throw ParseError("frobenius and monodromy sizes differ");
    return m;
}

FiniteImagePair finite_image_from_json(const Json& j) {
    FieldPtr K = field_from_json(need(j, "field"));
    GroupSpec g = group_from_json(need(j, "group"), K);
    std::vector<Matrix> gens;
    for (const auto& m : need_list(need(j, "generators"), "the generators"))
        gens.push_back(matrix_from_json(m, K));
    std::vector<std::vector<int>> rels;
    for (const auto& w : need_list(need(j, "relations"), "the relations")) {
        std::vector<int> word;
        for (const auto& letter : need_list(w, "a relation word")) {
            long v = need_integer(letter, "a generator index");
            if (v == 0 || static_cast<std::size_t>(v < 0 ? -v : v) > gens.size())
                throw ParseError("relation letter out of range");
            word.push_back(static_cast<int>(v));
        }
        rels.push_back(std::move(word));
    }
    return FiniteImagePair{std::move(g), std::move(gens), std::move(rels)};
}

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed document at byte " + std::to_string(e.byte) + ": " +
                         e.what());
    }
}

}
