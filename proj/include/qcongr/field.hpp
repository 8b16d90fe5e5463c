#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace qcongr {

/// Runtime description of a coefficient field: the rationals or a one-level
/// fraction-field tower over them (Q, Q(a), Q(q)). Tower depth is capped at 2.
class FieldDescriptor {
  public:
    enum class Kind { Rationals, FractionField };

    static FieldDescriptor rationals() { return FieldDescriptor(); }

    static FieldDescriptor fraction_field(std::string variable, FieldDescriptor inner) {
        if (inner.depth() >= 2) throw std::invalid_argument("field tower depth exceeds 2");
        if (inner.contains_variable(variable))
            throw std::invalid_argument("duplicate variable name in field tower");
        FieldDescriptor d;
        d.kind_ = Kind::FractionField;
        d.var_ = std::move(variable);
        d.inner_ = std::make_shared<FieldDescriptor>(std::move(inner));
        return d;
    }

    Kind kind() const { return kind_; }
    const std::string& variable() const { return var_; }
    const FieldDescriptor* inner() const { return inner_.get(); }

    int depth() const { return kind_ == Kind::Rationals ? 0 : 1 + inner_->depth(); }

    bool contains_variable(const std::string& v) const {
        if (kind_ == Kind::Rationals) return false;
        return var_ == v || inner_->contains_variable(v);
    }

    std::string name() const {
        if (kind_ == Kind::Rationals) return "Q";
        return inner_->name() + "(" + var_ + ")";
    }

    friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == Kind::Rationals) return true;
        return a.var_ == b.var_ && *a.inner_ == *b.inner_;
    }

  private:
    Kind kind_ = Kind::Rationals;
    std::string var_;
    std::shared_ptr<FieldDescriptor> inner_;
};

}  // namespace qcongr
