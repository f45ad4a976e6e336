#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lcskit/error.hpp"

namespace lcskit {

enum class CoordKind { cartesian, angular, collar };

struct CoordinateSymbol {
    std::string name;
    CoordKind kind = CoordKind::cartesian;

    bool operator==(const CoordinateSymbol&) const = default;
};

/// Role of one scalar variable in the coefficient ring of a chart.
struct ScalarVar {
    enum class Role { coordinate, sin, cos, parameter };
    Role role;
    std::size_t owner; // coordinate index (or parameter index for Role::parameter)
};

/// An ordered coordinate system. Coordinates contribute one polynomial
/// variable each; angular coordinates contribute an additional (sin, cos)
/// atom pair; parameters are constants with zero derivative and no
/// differential. The scalar variable sequence (coordinates, then trig
/// atoms, then parameters, all in declaration order) fixes the monomial
/// order of every ScalarExpr on the chart.
class Chart {
public:
    Chart(std::vector<CoordinateSymbol> coords, std::vector<std::string> params = {});

    static Chart cartesian(const std::vector<std::string>& names);

    std::size_t dimension() const { return data_->coords.size(); }
    const std::vector<CoordinateSymbol>& coords() const { return data_->coords; }
    const std::vector<std::string>& params() const { return data_->params; }

    std::size_t scalar_var_count() const { return data_->vars.size(); }
    const std::vector<ScalarVar>& scalar_vars() const { return data_->vars; }
    const std::string& var_name(std::size_t v) const { return data_->var_names[v]; }

    std::size_t coord_var(std::size_t coord) const;
    /// (sin, cos) variable pair of an angular coordinate.
    std::pair<std::size_t, std::size_t> trig_vars(std::size_t coord) const;
    std::size_t param_var(std::size_t param) const;

    std::optional<std::size_t> find_coord(const std::string& name) const;
    std::optional<std::size_t> find_param(const std::string& name) const;
    std::optional<std::size_t> find_collar_coord() const;

    bool operator==(const Chart& o) const {
        return data_ == o.data_ ||
               (data_->coords == o.data_->coords && data_->params == o.data_->params);
    }
    bool operator!=(const Chart& o) const { return !(*this == o); }

private:
    struct Data {
        std::vector<CoordinateSymbol> coords;
        std::vector<std::string> params;
        std::vector<ScalarVar> vars;
        std::vector<std::string> var_names;
        std::vector<std::size_t> coord_to_var;      // coordinate -> bare variable
        std::vector<std::ptrdiff_t> coord_to_trig;  // coordinate -> sin var (cos follows), -1 if none
        std::vector<std::size_t> param_to_var;
    };
    std::shared_ptr<const Data> data_;
};

} // namespace lcskit
