#include "wd/rep.hpp"

#include "wd/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace wd {

namespace {

constexpr unsigned kPowerCap = 12;
constexpr long kDimCap = 20000;

RepWordPtr make_word(RepWord::Kind k, unsigned power, std::vector<RepWordPtr> args) {
    auto w = std::make_shared<RepWord>();
    w->kind = k;
    w->power = power;
    w->args = std::move(args);
    return w;
}

int tuple_index(const std::vector<std::vector<int>>& tuples, const std::vector<int>& t) {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
    return static_cast<int>(it - tuples.begin());
}

void accumulate(std::map<std::vector<int>, FieldElement>& acc,
                const std::vector<int>& key, const FieldElement& v) {
    auto it = acc.find(key);
    if (it == acc.end())
        acc.emplace(key, v);
    else
        it->second = it->second + v;
}

/* sort a tuple counting transpositions; zero signals a repeated index */
int sort_sign(std::vector<int>& t) {
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i)
        for (std::size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
            std::swap(t[j], t[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] == t[i - 1]) return 0;
    return sign;
}

void extend_tuples(std::vector<std::vector<int>>& out, std::vector<int>& cur,
                   int n, unsigned k, int from, bool strict) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (int i = from; i < n; ++i) {
        cur.push_back(i);
        extend_tuples(out, cur, n, k, strict ? i + 1 : i, strict);
        cur.pop_back();
    }
}

Matrix sym_power(const Matrix& A, unsigned k) {
    const FieldPtr& K = A.field();
    int m = A.rows();
    auto tuples = sym_tuples(m, k);
    int d = static_cast<int>(tuples.size());
    Matrix R(K, d, d);
    for (int col = 0; col < d; ++col) {
        std::map<std::vector<int>, FieldElement> acc;
        acc.emplace(std::vector<int>{}, FieldElement::one(K));
        for (int s : tuples[static_cast<std::size_t>(col)]) {
            std::map<std::vector<int>, FieldElement> next;
            for (const auto& [mono, c] : acc)
                for (int i = 0; i < m; ++i) {
                    const FieldElement& a = A.at(i, s);
                    if (a.is_zero()) continue;
                    std::vector<int> key = mono;
                    key.insert(std::upper_bound(key.begin(), key.end(), i), i);
                    accumulate(next, key, c * a);
                }
            acc = std::move(next);
        }
        for (const auto& [mono, c] : acc) R.at(tuple_index(tuples, mono), col) = c;
    }
    return R;
}

Matrix alt_power(const Matrix& A, unsigned k) {
    const FieldPtr& K = A.field();
    int m = A.rows();
    auto tuples = alt_tuples(m, k);
    int d = static_cast<int>(tuples.size());
    Matrix R(K, d, d);
    for (int col = 0; col < d; ++col) {
        std::map<std::vector<int>, FieldElement> acc;
        acc.emplace(std::vector<int>{}, FieldElement::one(K));
        for (int s : tuples[static_cast<std::size_t>(col)]) {
            std::map<std::vector<int>, FieldElement> next;
            for (const auto& [mono, c] : acc)
                for (int i = 0; i < m; ++i) {
                    const FieldElement& a = A.at(i, s);
                    if (a.is_zero()) continue;
                    if (std::binary_search(mono.begin(), mono.end(), i)) continue;
                    int above = static_cast<int>(mono.end() -
                                std::upper_bound(mono.begin(), mono.end(), i));
                    std::vector<int> key = mono;
                    key.insert(std::upper_bound(key.begin(), key.end(), i), i);
                    FieldElement term = c * a;
                    accumulate(next, key, (above % 2) ? -term : term);
                }
            acc = std::move(next);
        }
        for (const auto& [mono, c] : acc) R.at(tuple_index(tuples, mono), col) = c;
    }
    return R;
}

Matrix sym_lie(const Matrix& X, unsigned k) {
    const FieldPtr& K = X.field();
    int m = X.rows();
    auto tuples = sym_tuples(m, k);
    int d = static_cast<int>(tuples.size());
    Matrix R(K, d, d);
    for (int col = 0; col < d; ++col) {
        const auto& S = tuples[static_cast<std::size_t>(col)];
        for (unsigned j = 0; j < k; ++j)
            for (int i = 0; i < m; ++i) {
                const FieldElement& v = X.at(i, S[j]);
                if (v.is_zero()) continue;
                std::vector<int> key = S;
                key[j] = i;
                std::sort(key.begin(), key.end());
                int r = tuple_index(tuples, key);
                R.at(r, col) = R.at(r, col) + v;
            }
    }
    return R;
}

Matrix alt_lie(const Matrix& X, unsigned k) {
    const FieldPtr& K = X.field();
    int m = X.rows();
    auto tuples = alt_tuples(m, k);
    int d = static_cast<int>(tuples.size());
    Matrix R(K, d, d);
    for (int col = 0; col < d; ++col) {
        const auto& S = tuples[static_cast<std::size_t>(col)];
        for (unsigned j = 0; j < k; ++j)
            for (int i = 0; i < m; ++i) {
                const FieldElement& v = X.at(i, S[j]);
                if (v.is_zero()) continue;
                std::vector<int> key = S;
                key[j] = i;
                int sign = sort_sign(key);
                if (sign == 0) continue;
                int r = tuple_index(tuples, key);
                R.at(r, col) = R.at(r, col) + (sign > 0 ? v : -v);
            }
    }
    return R;
}

struct WordParser {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            throw ParseError("expected '" + std::string(1, c) + "' at position " +
                             std::to_string(pos) + " in word '" + s + "'");
    }

    std::string ident() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos)
            throw ParseError("expected a word name at position " + std::to_string(pos) +
                             " in '" + s + "'");
        return s.substr(start, pos - start);
    }

    unsigned number() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos)
            throw ParseError("expected a power at position " + std::to_string(pos) +
                             " in '" + s + "'");
        return static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
    }

    RepWordPtr word() {
        std::string name = ident();
        if (name == "std") return word_std();
        if (name == "dual") {
            if (eat('(')) {
                RepWordPtr inner = word();
                expect(')');
                return word_dual(inner);
            }
            return word_dual();
        }
        if (name == "tensor" || name == "directsum") {
            expect('(');
            RepWordPtr a = word();
            expect(',');
            RepWordPtr b = word();
            expect(')');
            return name == "tensor" ? word_tensor(a, b) : word_directsum(a, b);
        }
        if (name == "sym" || name == "alt") {
            expect('^');
            unsigned k = number();
            expect('(');
            RepWordPtr inner = word();
            expect(')');
            return name == "sym" ? word_sym(k, inner) : word_alt(k, inner);
        }
        throw ParseError("unknown word constructor '" + name + "' in '" + s + "'");
    }
};

}  // namespace

RepWordPtr word_std() { return make_word(RepWord::Kind::Std, 0, {}); }

RepWordPtr word_dual(RepWordPtr w) {
    return make_word(RepWord::Kind::Dual, 0, {w ? std::move(w) : word_std()});
}

RepWordPtr word_tensor(RepWordPtr a, RepWordPtr b) {
    return make_word(RepWord::Kind::Tensor, 0, {std::move(a), std::move(b)});
}

RepWordPtr word_directsum(RepWordPtr a, RepWordPtr b) {
    return make_word(RepWord::Kind::DirectSum, 0, {std::move(a), std::move(b)});
}

RepWordPtr word_sym(unsigned k, RepWordPtr w) {
    return make_word(RepWord::Kind::Sym, k, {w ? std::move(w) : word_std()});
}

RepWordPtr word_alt(unsigned k, RepWordPtr w) {
    return make_word(RepWord::Kind::Alt, k, {w ? std::move(w) : word_std()});
}

std::string word_str(const RepWordPtr& w) {
    switch (w->kind) {
        case RepWord::Kind::Std:
            return "std";
        case RepWord::Kind::Dual:
            return "dual(" + word_str(w->args[0]) + ")";
        case RepWord::Kind::Tensor:
            return "tensor(" + word_str(w->args[0]) + "," + word_str(w->args[1]) + ")";
        case RepWord::Kind::DirectSum:
            return "directsum(" + word_str(w->args[0]) + "," + word_str(w->args[1]) + ")";
        case RepWord::Kind::Sym:
            return "sym^" + std::to_string(w->power) + "(" + word_str(w->args[0]) + ")";
        case RepWord::Kind::Alt:
            return "alt^" + std::to_string(w->power) + "(" + word_str(w->args[0]) + ")";
    }
    throw Error("unreachable word kind");
}

RepWordPtr parse_word(const std::string& s) {
    WordParser p{s};
    RepWordPtr w = p.word();
    p.skip();
    if (p.pos != s.size())
        throw ParseError("trailing input at position " + std::to_string(p.pos) +
                         " in word '" + s + "'");
    return w;
}

std::vector<std::vector<int>> sym_tuples(int n, unsigned k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    extend_tuples(out, cur, n, k, 0, false);
    return out;
}

std::vector<std::vector<int>> alt_tuples(int n, unsigned k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    extend_tuples(out, cur, n, k, 0, true);
    return out;
}

int word_dim(const RepWordPtr& w, int n) {
    long d = 0;
    switch (w->kind) {
        case RepWord::Kind::Std:
            d = n;
            break;
        case RepWord::Kind::Dual:
            d = word_dim(w->args[0], n);
            break;
        case RepWord::Kind::Tensor:
            d = static_cast<long>(word_dim(w->args[0], n)) * word_dim(w->args[1], n);
            break;
        case RepWord::Kind::DirectSum:
            d = static_cast<long>(word_dim(w->args[0], n)) + word_dim(w->args[1], n);
            break;
        case RepWord::Kind::Sym: {
            if (w->power > kPowerCap) throw DegreeBudgetExceeded("sym power " + std::to_string(w->power));
            long m = word_dim(w->args[0], n), out = 1;
            for (unsigned i = 0; i < w->power; ++i) out = out * (m + i) / (i + 1);
            d = out;
            break;
        }
        case RepWord::Kind::Alt: {
            if (w->power > kPowerCap) throw DegreeBudgetExceeded("alt power " + std::to_string(w->power));
            long m = word_dim(w->args[0], n), out = 1;
            if (static_cast<long>(w->power) > m)
                throw DegreeBudgetExceeded("alt power exceeds the space dimension");
            for (unsigned i = 0; i < w->power; ++i) out = out * (m - i) / (i + 1);
            d = out;
            break;
        }
    }
    if (d <= 0 || d > kDimCap) throw DegreeBudgetExceeded("word dimension " + std::to_string(d));
    return static_cast<int>(d);
}

int word_degree(const RepWordPtr& w) {
    switch (w->kind) {
        case RepWord::Kind::Std:
            return 1;
        case RepWord::Kind::Dual:
            return word_degree(w->args[0]);
        case RepWord::Kind::Tensor:
            return word_degree(w->args[0]) + word_degree(w->args[1]);
        case RepWord::Kind::DirectSum:
            return std::max(word_degree(w->args[0]), word_degree(w->args[1]));
        case RepWord::Kind::Sym:
        case RepWord::Kind::Alt:
            return static_cast<int>(w->power) * word_degree(w->args[0]);
    }
    throw Error("unreachable word kind");
}

Matrix word_group_eval(const RepWordPtr& w, const Matrix& g) {
    switch (w->kind) {
        case RepWord::Kind::Std:
            return g;
        case RepWord::Kind::Dual:
            return word_group_eval(w->args[0], g).inverse().transpose();
        case RepWord::Kind::Tensor:
            return kron(word_group_eval(w->args[0], g), word_group_eval(w->args[1], g));
        case RepWord::Kind::DirectSum:
            return block_diagonal({word_group_eval(w->args[0], g),
                                   word_group_eval(w->args[1], g)});
        case RepWord::Kind::Sym:
            return sym_power(word_group_eval(w->args[0], g), w->power);
        case RepWord::Kind::Alt:
            return alt_power(word_group_eval(w->args[0], g), w->power);
    }
    throw Error("unreachable word kind");
}

Matrix word_lie_eval(const RepWordPtr& w, const Matrix& x) {
    switch (w->kind) {
        case RepWord::Kind::Std:
            return x;
        case RepWord::Kind::Dual:
            return -word_lie_eval(w->args[0], x).transpose();
        case RepWord::Kind::Tensor: {
            Matrix A = word_lie_eval(w->args[0], x);
            Matrix B = word_lie_eval(w->args[1], x);
            Matrix Ia = Matrix::identity(x.field(), A.rows());
            Matrix Ib = Matrix::identity(x.field(), B.rows());
            return kron(A, Ib) + kron(Ia, B);
        }
        case RepWord::Kind::DirectSum:
            return block_diagonal({word_lie_eval(w->args[0], x),
                                   word_lie_eval(w->args[1], x)});
        case RepWord::Kind::Sym:
            return sym_lie(word_lie_eval(w->args[0], x), w->power);
        case RepWord::Kind::Alt:
            return alt_lie(word_lie_eval(w->args[0], x), w->power);
    }
    throw Error("unreachable word kind");
}

Rep::Rep(GroupSpec source, RepWordPtr word)
    : source_(std::move(source)), word_(std::move(word)),
      dim_(word_dim(word_, source_.dim())) {}

Matrix Rep::group_action(const Matrix& g) const {
    if (!g.square() || g.rows() != source_.dim())
        throw DimensionMismatch("group action argument size");
    return word_group_eval(word_, g);
}

Matrix Rep::lie_action(const Matrix& x) const {
    if (!x.square() || x.rows() != source_.dim())
        throw DimensionMismatch("lie action argument size");
    return word_lie_eval(word_, x);
}

Rep build_rep(const GroupSpec& g, const RepWordPtr& word) { return Rep(g, word); }

Rep build_rep(const GroupSpec& g, const std::string& word) {
    return Rep(g, parse_word(word));
}

std::vector<Rep> rep_family(const GroupSpec& g, int degree_bound) {
    if (degree_bound < 1) throw DegreeBudgetExceeded("degree bound must be positive");
    int n = g.dim();
    std::vector<RepWordPtr> base;
    base.push_back(word_std());
    base.push_back(word_dual());
    for (int k = 2; k <= degree_bound && k <= n; ++k)
        base.push_back(word_alt(static_cast<unsigned>(k)));
    for (int k = 2; k <= degree_bound; ++k)
        base.push_back(word_sym(static_cast<unsigned>(k)));
    std::vector<RepWordPtr> words = base;
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i; j < base.size(); ++j)
            if (word_degree(base[i]) + word_degree(base[j]) <= degree_bound)
                words.push_back(word_tensor(base[i], base[j]));
    std::vector<Rep> out;
    std::vector<std::string> seen;
    for (const auto& w : words) {
        std::string key = word_str(w);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        out.push_back(build_rep(g, w));
    }
    return out;
}

}
