#pragma once

#include "wd/group.hpp"
#include "wd/matrix.hpp"

#include <memory>
#include <string>
#include <vector>

namespace wd {

struct RepWord;
using RepWordPtr = std::shared_ptr<const RepWord>;

/* construction expression over { std, dual, tensor, directsum, sym^k, alt^k } */
struct RepWord {
    enum class Kind { Std, Dual, Tensor, DirectSum, Sym, Alt };
    Kind kind;
    unsigned power = 0;
    std::vector<RepWordPtr> args;
};

RepWordPtr word_std();
RepWordPtr word_dual(RepWordPtr w = nullptr);
RepWordPtr word_tensor(RepWordPtr a, RepWordPtr b);
RepWordPtr word_directsum(RepWordPtr a, RepWordPtr b);
RepWordPtr word_sym(unsigned k, RepWordPtr w = nullptr);
RepWordPtr word_alt(unsigned k, RepWordPtr w = nullptr);

/* canonical text form, e.g. "tensor(std,dual(std))" or "alt^2(std)" */
std::string word_str(const RepWordPtr& w);
RepWordPtr parse_word(const std::string& s);

int word_dim(const RepWordPtr& w, int n);
int word_degree(const RepWordPtr& w);

/* action of a base-space matrix on the word space; the monomial basis is
   ordered lexicographically on index tuples, sym uses non-decreasing and alt
   strictly increasing tuples, both without normalization factors */
Matrix word_group_eval(const RepWordPtr& w, const Matrix& g);
Matrix word_lie_eval(const RepWordPtr& w, const Matrix& x);

class Rep {
public:
    Rep(GroupSpec source, RepWordPtr word);

    const GroupSpec& source() const { return source_; }
    const RepWordPtr& word() const { return word_; }
    int dim() const { return dim_; }

    Matrix group_action(const Matrix& g) const;
    Matrix lie_action(const Matrix& x) const;

    std::string str() const { return word_str(word_); }

private:
    GroupSpec source_;
    RepWordPtr word_;
    int dim_;
};

Rep build_rep(const GroupSpec& g, const RepWordPtr& word);
Rep build_rep(const GroupSpec& g, const std::string& word);

/* deterministic enumeration up to total tensor degree: std, dual, alt powers
   of std, sym powers of std, then pairwise tensors of those */
std::vector<Rep> rep_family(const GroupSpec& g, int degree_bound);

/* non-decreasing (sym) and strictly increasing (alt) index tuples in
   lexicographic order */
std::vector<std::vector<int>> sym_tuples(int n, unsigned k);
std::vector<std::vector<int>> alt_tuples(int n, unsigned k);

}
