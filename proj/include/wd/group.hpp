#pragma once

#include "wd/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wd {

enum class GroupKind { GL, SL, Sp, SO, O, Product, TensorStabilizer };

/* an invariant tensor, given by a construction-word shape over the standard
   space and its dual together with its coordinates in the monomial basis of
   that space */
struct TensorDatum {
    std::string shape;
    std::vector<FieldElement> entries;
};

class GroupSpec {
public:
    static GroupSpec gl(const FieldPtr& K, int n);
    static GroupSpec sl(const FieldPtr& K, int n);
    static GroupSpec sp(Matrix J);
    static GroupSpec so(Matrix B);
    static GroupSpec orthogonal(Matrix B);
    /* antidiagonal form with +1 above the centre and -1 below, n even */
    static GroupSpec sp_standard(const FieldPtr& K, int n);
    /* identity form */
    static GroupSpec so_standard(const FieldPtr& K, int n);
    static GroupSpec product(std::vector<GroupSpec> factors);
    static GroupSpec tensor_stabilizer(const FieldPtr& K, int n,
                                       std::vector<TensorDatum> tensors);

    GroupKind kind() const { return kind_; }
    int dim() const { return n_; }
    const FieldPtr& field() const { return K_; }
    const Matrix& form() const;
    const std::vector<GroupSpec>& factors() const { return factors_; }
    const std::vector<TensorDatum>& tensors() const { return tensors_; }

    bool is_gl_type() const { return kind_ == GroupKind::GL; }
    bool same(const GroupSpec& o) const;
    GroupSpec lift(const FieldPtr& K2) const;
    std::string str() const;

private:
    explicit GroupSpec(GroupKind k) : kind_(k) {}
    GroupKind kind_;
    int n_ = 0;
    FieldPtr K_;
    std::optional<Matrix> form_;
    std::vector<GroupSpec> factors_;
    std::vector<TensorDatum> tensors_;
};

/* defining equations of the group, tested exactly */
bool contains(const GroupSpec& g, const Matrix& m);

/* linearized equations of the Lie algebra, tested exactly */
bool lie_contains(const GroupSpec& g, const Matrix& x);

/* basis of Lie(g) as a subspace of the n-by-n matrices over the given field */
std::vector<Matrix> lie_basis(const GroupSpec& g, const FieldPtr& K);

}
