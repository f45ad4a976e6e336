#include "lcskit/chart.hpp"

#include <set>

namespace lcskit {

Chart::Chart(std::vector<CoordinateSymbol> coords, std::vector<std::string> params) {
    auto data = std::make_shared<Data>();
    data->coords = std::move(coords);
    data->params = std::move(params);

    std::set<std::string> seen;
    for (const auto& c : data->coords) {
        if (c.name.empty() || !seen.insert(c.name).second)
            throw Error(ErrorKind::UnknownSymbol,
                        "duplicate or empty coordinate name '" + c.name + "'");
    }
    for (const auto& p : data->params) {
        if (p.empty() || !seen.insert(p).second)
            throw Error(ErrorKind::UnknownSymbol,
                        "duplicate or empty parameter name '" + p + "'");
    }

    data->coord_to_var.resize(data->coords.size());
    data->coord_to_trig.assign(data->coords.size(), -1);
    for (std::size_t i = 0; i < data->coords.size(); ++i) {
        data->coord_to_var[i] = data->vars.size();
        data->vars.push_back({ScalarVar::Role::coordinate, i});
        data->var_names.push_back(data->coords[i].name);
    }
    for (std::size_t i = 0; i < data->coords.size(); ++i) {
        if (data->coords[i].kind != CoordKind::angular) continue;
        data->coord_to_trig[i] = static_cast<std::ptrdiff_t>(data->vars.size());
        data->vars.push_back({ScalarVar::Role::sin, i});
        data->var_names.push_back("sin(" + data->coords[i].name + ")");
        data->vars.push_back({ScalarVar::Role::cos, i});
        data->var_names.push_back("cos(" + data->coords[i].name + ")");
    }
    for (std::size_t i = 0; i < data->params.size(); ++i) {
        data->param_to_var.push_back(data->vars.size());
        data->vars.push_back({ScalarVar::Role::parameter, i});
        data->var_names.push_back(data->params[i]);
    }
    data_ = std::move(data);
}

Chart Chart::cartesian(const std::vector<std::string>& names) {
    std::vector<CoordinateSymbol> coords;
    coords.reserve(names.size());
    for (const auto& n : names) coords.push_back({n, CoordKind::cartesian});
    return Chart(std::move(coords));
}

std::size_t Chart::coord_var(std::size_t coord) const {
    return data_->coord_to_var.at(coord);
}

std::pair<std::size_t, std::size_t> Chart::trig_vars(std::size_t coord) const {
    std::ptrdiff_t s = data_->coord_to_trig.at(coord);
    if (s < 0)
        throw Error(ErrorKind::UnknownSymbol,
                    "coordinate '" + data_->coords[coord].name + "' is not angular");
    return {static_cast<std::size_t>(s), static_cast<std::size_t>(s) + 1};
}

std::size_t Chart::param_var(std::size_t param) const {
    return data_->param_to_var.at(param);
}

std::optional<std::size_t> Chart::find_coord(const std::string& name) const {
    for (std::size_t i = 0; i < data_->coords.size(); ++i)
        if (data_->coords[i].name == name) return i;
    return std::nullopt;
}

std::optional<std::size_t> Chart::find_param(const std::string& name) const {
    for (std::size_t i = 0; i < data_->params.size(); ++i)
        if (data_->params[i] == name) return i;
    return std::nullopt;
}

std::optional<std::size_t> Chart::find_collar_coord() const {
    for (std::size_t i = 0; i < data_->coords.size(); ++i)
        if (data_->coords[i].kind == CoordKind::collar) return i;
    return std::nullopt;
}

} // namespace lcskit
