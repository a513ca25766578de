#include "polyrl/action_network.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace polyrl {

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

std::string format_double(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{})
        throw std::runtime_error("weights: failed to format value");
    return std::string(buf, end);
}

[[noreturn]] void file_error(const std::filesystem::path& path, std::size_t line,
                             const std::string& what) {
    throw std::runtime_error("weights: " + path.string() + ":" +
                             std::to_string(line) + ": " + what);
}

}  // namespace

void validate(const NetworkTopology& t) {
    if (t.inputs == 0 || t.hidden == 0 || t.outputs == 0)
        throw std::invalid_argument("topology: layer sizes must be positive");
}

std::size_t parameter_count(const NetworkTopology& t) {
    validate(t);
    std::size_t count = t.inputs * t.hidden + t.hidden + t.hidden * t.outputs +
                        t.outputs;
    if (t.shortcut_connections)
        count += t.inputs * t.outputs;
    return count;
}

UnpackedWeights unpack(const NetworkTopology& t, const ParameterVector& params) {
    if (params.size() != parameter_count(t))
        throw std::invalid_argument("network: parameter count mismatch");
    UnpackedWeights w;
    auto it = params.begin();
    auto take = [&](std::size_t count) {
        std::vector<double> v(it, it + static_cast<std::ptrdiff_t>(count));
        it += static_cast<std::ptrdiff_t>(count);
        return v;
    };
    w.input_hidden = take(t.inputs * t.hidden);
    w.hidden_bias = take(t.hidden);
    w.hidden_output = take(t.hidden * t.outputs);
    if (t.shortcut_connections)
        w.input_output = take(t.inputs * t.outputs);
    w.output_bias = take(t.outputs);
    return w;
}

ParameterVector pack(const NetworkTopology& t, const UnpackedWeights& w) {
    ParameterVector params;
    params.reserve(parameter_count(t));
    for (const auto* part : {&w.input_hidden, &w.hidden_bias, &w.hidden_output,
                             &w.input_output, &w.output_bias})
        params.insert(params.end(), part->begin(), part->end());
    if (params.size() != parameter_count(t))
        throw std::invalid_argument("network: unpacked sizes do not match topology");
    return params;
}

double forward(const NetworkTopology& t, const ParameterVector& params,
               std::span<const double> inputs) {
    if (t.outputs != 1)
        throw std::invalid_argument("network: forward expects a single output unit");
    if (params.size() != parameter_count(t))
        throw std::invalid_argument("network: parameter count mismatch");
    if (inputs.size() != t.inputs)
        throw std::invalid_argument("network: input count mismatch");
    for (double in : inputs)
        if (!std::isfinite(in))
            throw std::domain_error("network: non-finite input");

    const double* w_ih = params.data();
    const double* b_h = w_ih + t.inputs * t.hidden;
    const double* w_ho = b_h + t.hidden;
    const double* w_io = w_ho + t.hidden;
    const double* b_o = w_io + (t.shortcut_connections ? t.inputs : 0);

    double out = b_o[0];
    for (std::size_t j = 0; j < t.hidden; ++j) {
        double z = b_h[j];
        const double* row = w_ih + j * t.inputs;
        for (std::size_t i = 0; i < t.inputs; ++i)
            z += row[i] * inputs[i];
        out += w_ho[j] * sigmoid(z);
    }
    if (t.shortcut_connections)
        for (std::size_t i = 0; i < t.inputs; ++i)
            out += w_io[i] * inputs[i];
    return sigmoid(out);
}

std::array<double, 4> scale_state(const CartPoleState& s, const EnvConfig& cfg) {
    constexpr double x_dot_scale = 2.0;    // m/s
    constexpr double theta_dot_scale = 3.0;  // rad/s
    return {s.x / cfg.x_fail, s.x_dot / x_dot_scale, s.theta / cfg.theta_fail,
            s.theta_dot / theta_dot_scale};
}

void save_weights(const std::filesystem::path& path, const NetworkTopology& t,
                  const ParameterVector& params) {
    if (params.size() != parameter_count(t))
        throw std::invalid_argument("weights: parameter count mismatch");
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("weights: cannot open " + path.string() +
                                 " for writing");
    out << "topology " << t.inputs << ' ' << t.hidden << ' ' << t.outputs << ' '
        << (t.shortcut_connections ? "shortcut" : "noshortcut") << '\n';
    out << params.size() << '\n';
    for (double v : params)
        out << format_double(v) << '\n';
    out.flush();
    if (!out)
        throw std::runtime_error("weights: failed writing " + path.string());
}

LoadedNetwork load_weights(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("weights: cannot open " + path.string());

    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line))
        file_error(path, line_no, "missing topology header");

    NetworkTopology t;
    {
        std::istringstream header(line);
        std::string tag, shortcut;
        if (!(header >> tag >> t.inputs >> t.hidden >> t.outputs >> shortcut) ||
            tag != "topology")
            file_error(path, line_no, "malformed topology header");
        if (shortcut == "shortcut")
            t.shortcut_connections = true;
        else if (shortcut == "noshortcut")
            t.shortcut_connections = false;
        else
            file_error(path, line_no, "unknown shortcut flag '" + shortcut + "'");
    }

    ++line_no;
    if (!std::getline(in, line))
        file_error(path, line_no, "missing parameter count");
    std::size_t declared = 0;
    {
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), declared);
        if (ec != std::errc{} || ptr != line.data() + line.size())
            file_error(path, line_no, "malformed parameter count '" + line + "'");
    }
    const std::size_t expected = parameter_count(t);
    if (declared != expected)
        file_error(path, line_no,
                   "parameter count mismatch: expected " + std::to_string(expected) +
                       " for this topology, found " + std::to_string(declared));

    ParameterVector params;
    params.reserve(expected);
    while (params.size() < expected) {
        ++line_no;
        if (!std::getline(in, line))
            file_error(path, line_no,
                       "unexpected end of file: expected " + std::to_string(expected) +
                           " parameters, found " + std::to_string(params.size()));
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
        if (ec != std::errc{} || ptr != line.data() + line.size() || !std::isfinite(v))
            file_error(path, line_no, "malformed parameter '" + line + "'");
        params.push_back(v);
    }
    return LoadedNetwork{t, std::move(params)};
}

}  // namespace polyrl
