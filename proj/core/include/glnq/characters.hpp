#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "glnq/flag_module.hpp"

namespace glnq {

/// Persistent store of computed character values, keyed by (n, q, coefficient
/// mode). One append-only record file per key, records
/// "element-encoding TAB lambda TAB value"; corrupt trailing records are
/// truncated on load, so a reader tolerates a concurrent appender. With an
/// empty directory path the cache is memory-only.
class TraceCache {
public:
    TraceCache() = default;
    TraceCache(const std::filesystem::path& dir, int n, int q, const CoeffField& K);

    std::optional<KScalar> lookup(const std::string& element_key, const Partition& lambda) const;
    void store(const std::string& element_key, const Partition& lambda, const KScalar& value);

    const std::filesystem::path& file() const { return file_; }
    size_t size() const { return values_.size(); }

private:
    const CoeffField* K_ = nullptr;
    std::filesystem::path file_;
    std::map<std::pair<std::string, std::string>, KScalar> values_;
};

/// Matrix of g acting on a span basis: column i holds the coordinates of
/// g . basis[i]. Throws std::runtime_error if the image leaves the span,
/// which would signal a spanning bug.
KMat action_matrix(const FqMatrix& g, const SpanBasis& basis);

/// A class function given by a value provider, with per-element caching.
/// Values are spot-checked to be constant on conjugacy classes by the tests,
/// never assumed by construction.
class ClassFunction {
public:
    ClassFunction() = default;
    ClassFunction(std::string tag, std::function<KScalar(const FqMatrix&)> eval)
        : tag_(std::move(tag)), eval_(std::move(eval)) {}

    const std::string& tag() const { return tag_; }
    KScalar operator()(const FqMatrix& g) const;

private:
    std::string tag_;
    std::function<KScalar(const FqMatrix&)> eval_;
    mutable std::map<std::string, KScalar> memo_;
};

/// Shared state for character work at fixed (n, q, K): the S^lambda bases,
/// the trace cache, and the Frobenius-reciprocity multiplicity sums.
class UnipotentContext {
public:
    UnipotentContext(int n, int q, const CoeffField& K, EnumBudget budget = {},
                     const std::filesystem::path& cache_dir = {});

    int n() const { return n_; }
    int q() const { return field_->q(); }
    const FieldSpec& field() const { return *field_; }
    const CoeffField& coeff_field() const { return *K_; }
    const EnumBudget& budget() const { return budget_; }

    const SpanBasis& basis(const Partition& lambda);
    long long dim_s(const Partition& lambda) { return basis(lambda).rank(); }

    /// chi_{S^lambda}(g): the trace of g on S^lambda.
    KScalar char_value(const FqMatrix& g, const Partition& lambda);
    ClassFunction character(const Partition& lambda);

    /// <f1, f2> = |G|^{-1} sum over g of f1(g) f2(g^{-1}); exact. Throws
    /// std::domain_error when |G| is not invertible in K.
    KScalar inner_product(const ClassFunction& f1, const ClassFunction& f2);

    /// <Ind_{P_lambda}^G 1, chi_{S^mu}> = |P_lambda|^{-1} sum over P_lambda
    /// of chi_{S^mu}.
    long long parabolic_multiplicity(const Partition& lambda_par, const Partition& mu);

    /// <Gamma^lambda, chi_{S^mu}> where Gamma^lambda = Ind_{U(T)}^G psi_T for
    /// the standard-basis tableau T of shape lambda (so U(T) = U_{lambda'}).
    long long ggg_multiplicity(const Partition& lambda, const Partition& mu);

    /// <Psi^lambda, chi_{S^mu}> where Psi^lambda is induced from the linear
    /// character u -> theta(sum of u_{i,i+1} over i not in {lambda_1,
    /// lambda_1+lambda_2, ...}) of the full unitriangular group.
    long long dgg_multiplicity(const Partition& lambda, const Partition& mu);

private:
    long long as_multiplicity(const KScalar& v) const;

    int n_;
    const FieldSpec* field_;
    const CoeffField* K_;
    EnumBudget budget_;
    std::map<Partition, SpanBasis> bases_;
    TraceCache cache_;
};

} // namespace glnq
