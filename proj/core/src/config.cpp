// Copyright 2026 The qmelt Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmelt/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "qmelt/error.hpp"
#include "qmelt/number_format.hpp"

namespace qmelt {

namespace {

// Reads scalars out of a flat YAML map and remembers which keys were used, so
// leftovers can be reported as unknown.
class FlatMap {
  public:
    explicit FlatMap(const std::string &text) {
        try {
            root_ = YAML::Load(text);
        } catch (const YAML::Exception &e) {
            throw ConfigError(std::string("malformed config: ") + e.what());
        }
        if (!root_.IsNull() && !root_.IsMap()) {
            throw ConfigError("config must be a map of key: value entries");
        }
    }

    [[nodiscard]] bool has(const std::string &key) {
        used_.insert(key);
        return root_.IsMap() && root_[key] && !root_[key].IsNull();
    }

    std::string text(const std::string &key, const std::string &fallback) {
        if (!has(key)) {
            return fallback;
        }
        return scalar(root_[key], key);
    }

    std::vector<std::string> list(const std::string &key,
                                  const std::vector<std::string> &fallback) {
        if (!has(key)) {
            return fallback;
        }
        const YAML::Node node = root_[key];
        std::vector<std::string> out;
        if (node.IsSequence()) {
            for (const auto &item : node) {
                out.push_back(scalar(item, key));
            }
        } else {
            out.push_back(scalar(node, key));
        }
        if (out.empty()) {
            throw ConfigError("'" + key + "' must not be empty");
        }
        return out;
    }

    double real(const std::string &key, double fallback) {
        return has(key) ? to_real(key, scalar(root_[key], key)) : fallback;
    }

    std::uint64_t u64(const std::string &key, std::uint64_t fallback) {
        return has(key) ? to_u64(key, scalar(root_[key], key)) : fallback;
    }

    bool flag(const std::string &key, bool fallback) {
        if (!has(key)) {
            return fallback;
        }
        const std::string v = scalar(root_[key], key);
        if (v == "true") {
            return true;
        }
        if (v == "false") {
            return false;
        }
        throw ConfigError("'" + key + "' must be true or false, got '" + v + "'");
    }

    /// Throws ConfigError naming the first key that was never read.
    void reject_unknown() const {
        if (!root_.IsMap()) {
            return;
        }
        for (const auto &entry : root_) {
            const auto key = entry.first.as<std::string>();
            if (!used_.contains(key)) {
                throw ConfigError("unknown config key '" + key + "'");
            }
        }
    }

    static double to_real(const std::string &key, const std::string &v) {
        try {
            return parse_double(v);
        } catch (const std::exception &) {
            throw ConfigError("'" + key + "' must be a number, got '" + v + "'");
        }
    }

    static std::uint64_t to_u64(const std::string &key, const std::string &v) {
        if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw ConfigError("'" + key + "' must be a non-negative integer, got '" + v + "'");
        }
        try {
            return std::stoull(v);
        } catch (const std::exception &) {
            throw ConfigError("'" + key + "' is out of range: '" + v + "'");
        }
    }

  private:
    static std::string scalar(const YAML::Node &node, const std::string &key) {
        if (!node.IsScalar()) {
            throw ConfigError("'" + key + "' must be a scalar");
        }
        return node.Scalar();
    }

    YAML::Node root_;
    std::set<std::string> used_;
};

// Maps the InvalidArgument thrown by the enum parsers onto a config error
// that names the offending key.
template <typename Parse>
auto parse_key(const std::string &key, const std::string &value, Parse parse) {
    try {
        return parse(value);
    } catch (const InvalidArgument &e) {
        throw ConfigError("'" + key + "': " + e.what());
    }
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string &key, const std::vector<std::string> &values,
                          Parse parse) {
    std::vector<T> out;
    for (const auto &v : values) {
        out.push_back(parse_key(key, v, parse));
    }
    return out;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read config '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CvSettings read_cv(FlatMap &map) {
    CvSettings cv;
    cv.k = map.u64("folds", cv.k);
    cv.fold_seed = map.u64("fold_seed", cv.fold_seed);
    cv.base_seed = map.u64("seed", cv.base_seed);
    if (cv.k < 2) {
        throw ConfigError("'folds' must be at least 2");
    }
    return cv;
}

OptimizerSettings read_optimizer(FlatMap &map) {
    OptimizerSettings s;
    s.relative_tolerance = map.real("relative_tolerance", s.relative_tolerance);
    s.max_iterations = map.u64("max_iterations", s.max_iterations);
    s.line_search_tolerance = map.real("line_search_tolerance", s.line_search_tolerance);
    try {
        s.validate();
    } catch (const InvalidArgument &e) {
        throw ConfigError(e.what());
    }
    return s;
}

std::size_t read_restarts(FlatMap &map) {
    const auto restarts = map.u64("restarts", 1);
    if (restarts == 0) {
        throw ConfigError("'restarts' must be at least 1");
    }
    return restarts;
}

TrainingConfig read_training(FlatMap &map) {
    TrainingConfig t;
    t.learning_rate = map.real("learning_rate", t.learning_rate);
    t.epochs = map.u64("epochs", t.epochs);
    t.l2_weight = map.real("l2_weight", t.l2_weight);
    return t;
}

void validate_training(const TrainingConfig &t) {
    try {
        t.validate();
    } catch (const InvalidArgument &e) {
        throw ConfigError(e.what());
    }
}

class Echo {
  public:
    template <typename T> Echo &operator()(const std::string &key, const T &value) {
        out_ << key << ": " << render(value) << '\n';
        return *this;
    }

    template <typename T> Echo &list(const std::string &key, const std::vector<T> &values) {
        out_ << key << ": [";
        for (std::size_t i = 0; i < values.size(); ++i) {
            out_ << (i ? ", " : "") << render(values[i]);
        }
        out_ << "]\n";
        return *this;
    }

    [[nodiscard]] std::string str() const { return out_.str(); }

  private:
    static std::string render(const std::string &v) { return v; }
    static std::string render(const char *v) { return v; }
    static std::string render(double v) { return format_double(v); }
    static std::string render(bool v) { return v ? "true" : "false"; }
    static std::string render(std::size_t v) { return std::to_string(v); }
    static std::string render(std::uint32_t v) { return std::to_string(v); }

    std::ostringstream out_;
};

void echo_cv(Echo &echo, const CvSettings &cv) {
    echo("folds", cv.k)("fold_seed", std::size_t{cv.fold_seed})("seed", std::size_t{cv.base_seed});
}

void echo_optimizer(Echo &echo, const OptimizerSettings &s, std::size_t restarts) {
    echo("relative_tolerance", s.relative_tolerance)("max_iterations", s.max_iterations)(
        "line_search_tolerance", s.line_search_tolerance)("restarts", restarts);
}

void echo_training(Echo &echo, const TrainingConfig &t, bool with_l2) {
    echo("learning_rate", t.learning_rate)("epochs", t.epochs);
    if (with_l2) {
        echo("l2_weight", t.l2_weight);
    }
}

template <typename T> std::vector<std::string> names(const std::vector<T> &values) {
    std::vector<std::string> out;
    for (const auto &v : values) {
        out.push_back(to_string(v));
    }
    return out;
}

const std::vector<std::string> kAllEntanglers{"linear", "circular", "circular2", "circular4",
                                              "full"};

} // namespace

RunConfig parse_run_config(const std::string &text) {
    FlatMap map(text);
    RunConfig config;
    config.cv = read_cv(map);
    const std::string model = map.text("model", "qnn");
    if (model == "qnn") {
        QnnConfig q;
        q.encoder.layout = parse_key("layout", map.text("layout", "5x"), parse_encoder_layout);
        q.encoder.angle_map = parse_key("angle_map", map.text("angle_map", "arctan"), parse_angle_map);
        q.ansatz.width = q.encoder.n_qubits();
        if (map.has("width") && map.u64("width", 0) != q.ansatz.width) {
            throw ConfigError("'width' must equal the encoder layout's qubit count (" +
                              std::to_string(q.ansatz.width) + ")");
        }
        q.ansatz.entangler =
            parse_key("entangler", map.text("entangler", "linear"), parse_entangler_kind);
        q.ansatz.gate = parse_key("gate", map.text("gate", "cx"), parse_entangling_gate);
        q.ansatz.depth = map.u64("depth", 1);
        if (q.ansatz.depth == 0) {
            throw ConfigError("'depth' must be at least 1");
        }
        q.optimizer = read_optimizer(map);
        q.restarts = read_restarts(map);
        config.model = q;
    } else if (model == "mlp") {
        MlpConfig m;
        m.arch = parse_key("arch", map.text("arch", "5-5-1"), parse_architecture);
        m.training = read_training(map);
        validate_training(m.training);
        config.model = m;
    } else if (model == "mean") {
        config.model = MeanConfig{};
    } else {
        throw ConfigError("'model' must be qnn, mlp or mean, got '" + model + "'");
    }
    map.reject_unknown();
    return config;
}

RunConfig load_run_config(const std::filesystem::path &path) {
    return parse_run_config(read_file(path));
}

std::string echo_config(const RunConfig &config) {
    Echo echo;
    if (const auto *q = std::get_if<QnnConfig>(&config.model)) {
        echo("model", "qnn")("layout", to_string(q->encoder.layout))(
            "angle_map", to_string(q->encoder.angle_map))("width", q->ansatz.width)(
            "entangler", to_string(q->ansatz.entangler))("gate", to_string(q->ansatz.gate))(
            "depth", q->ansatz.depth);
        echo_optimizer(echo, q->optimizer, q->restarts);
    } else if (const auto *m = std::get_if<MlpConfig>(&config.model)) {
        echo("model", "mlp")("arch", m->arch.label());
        echo_training(echo, m->training, true);
    } else {
        echo("model", "mean");
    }
    echo_cv(echo, config.cv);
    return echo.str();
}

SweepConfig parse_sweep_config(const std::string &text) {
    FlatMap map(text);
    SweepConfig config;
    config.cv = read_cv(map);
    const auto models = map.list("models", {"qnn"});
    for (const auto &m : models) {
        if (m == "qnn") {
            QnnGrid q;
            q.layouts = parse_list<EncoderLayout>("layouts", map.list("layouts", {"5x"}),
                                                  parse_encoder_layout);
            q.angle_maps = parse_list<AngleMap>("angle_maps", map.list("angle_maps", {"arctan"}),
                                                parse_angle_map);
            q.entanglers = parse_list<EntanglerKind>(
                "entanglers", map.list("entanglers", {"linear"}), parse_entangler_kind);
            q.gates = parse_list<EntanglingGate>("gates", map.list("gates", {"cx"}),
                                                 parse_entangling_gate);
            q.depths.clear();
            for (const auto &d : map.list("depths", {"1"})) {
                const auto depth = FlatMap::to_u64("depths", d);
                if (depth == 0) {
                    throw ConfigError("'depths' entries must be at least 1");
                }
                q.depths.push_back(depth);
            }
            q.optimizer = read_optimizer(map);
            q.restarts = read_restarts(map);
            config.grid.qnn = q;
        } else if (m == "mlp") {
            MlpGrid g;
            g.archs = parse_list<MlpArchitecture>("archs", map.list("archs", {"5-5-1"}),
                                                  parse_architecture);
            g.l2_weights.clear();
            for (const auto &w : map.list("l2_weights", {"0.0001"})) {
                g.l2_weights.push_back(FlatMap::to_real("l2_weights", w));
            }
            g.training = read_training(map);
            for (const double w : g.l2_weights) {
                TrainingConfig t = g.training;
                t.l2_weight = w;
                validate_training(t);
            }
            config.grid.mlp = g;
        } else if (m == "mean") {
            config.grid.include_mean = true;
        } else {
            throw ConfigError("'models' entries must be qnn, mlp or mean, got '" + m + "'");
        }
    }
    map.reject_unknown();
    return config;
}

SweepConfig load_sweep_config(const std::filesystem::path &path) {
    return parse_sweep_config(read_file(path));
}

std::string echo_config(const SweepConfig &config) {
    Echo echo;
    std::vector<std::string> models;
    if (config.grid.qnn) {
        models.emplace_back("qnn");
    }
    if (config.grid.mlp) {
        models.emplace_back("mlp");
    }
    if (config.grid.include_mean) {
        models.emplace_back("mean");
    }
    echo.list("models", models);
    if (const auto &q = config.grid.qnn) {
        echo.list("layouts", names(q->layouts))
            .list("angle_maps", names(q->angle_maps))
            .list("entanglers", names(q->entanglers))
            .list("gates", names(q->gates))
            .list("depths", q->depths);
        echo_optimizer(echo, q->optimizer, q->restarts);
    }
    if (const auto &g = config.grid.mlp) {
        std::vector<std::string> archs;
        for (const auto &a : g->archs) {
            archs.push_back(a.label());
        }
        echo.list("archs", archs).list("l2_weights", g->l2_weights);
        echo_training(echo, g->training, false);
    }
    echo_cv(echo, config.cv);
    return echo.str();
}

std::vector<AnsatzSpec> ExpressConfig::expand() const {
    std::vector<AnsatzSpec> out;
    for (const auto &[entangler, gate] : ansatzes) {
        for (const std::size_t depth : depths) {
            AnsatzSpec spec{width, depth, entangler, gate};
            spec.validate();
            out.push_back(spec);
        }
    }
    return out;
}

std::pair<EntanglerKind, EntanglingGate> parse_ansatz_name(const std::string &text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return {parse_entangler_kind(text), EntanglingGate::CX};
    }
    return {parse_entangler_kind(text.substr(0, slash)),
            parse_entangling_gate(text.substr(slash + 1))};
}

ExpressConfig parse_express_config(const std::string &text) {
    FlatMap map(text);
    ExpressConfig config;
    if (map.has("ansatzes")) {
        for (const auto &name : map.list("ansatzes", {})) {
            config.ansatzes.push_back(parse_key("ansatzes", name, parse_ansatz_name));
        }
    } else {
        const auto entanglers = parse_list<EntanglerKind>(
            "entanglers", map.list("entanglers", kAllEntanglers), parse_entangler_kind);
        const auto gates =
            parse_list<EntanglingGate>("gates", map.list("gates", {"cx"}), parse_entangling_gate);
        for (const auto e : entanglers) {
            for (const auto g : gates) {
                config.ansatzes.emplace_back(e, g);
            }
        }
    }
    config.width = map.u64("width", config.width);
    config.depths.clear();
    for (const auto &d : map.list("depths", {"1"})) {
        config.depths.push_back(FlatMap::to_u64("depths", d));
    }
    config.settings.n_pairs = map.u64("n_pairs", config.settings.n_pairs);
    config.settings.n_bins = map.u64("n_bins", config.settings.n_bins);
    config.settings.entropy_samples = map.u64("entropy_samples", config.settings.entropy_samples);
    config.settings.seed = map.u64("seed", config.settings.seed);
    map.reject_unknown();
    try {
        (void)config.expand();
    } catch (const InvalidArgument &e) {
        throw ConfigError(e.what());
    }
    return config;
}

ExpressConfig load_express_config(const std::filesystem::path &path) {
    return parse_express_config(read_file(path));
}

std::string echo_config(const ExpressConfig &config) {
    Echo echo;
    std::vector<std::string> ansatzes;
    for (const auto &[e, g] : config.ansatzes) {
        ansatzes.push_back(to_string(e) + "/" + to_string(g));
    }
    echo.list("ansatzes", ansatzes)
        ("width", config.width)
        .list("depths", config.depths)("n_pairs", config.settings.n_pairs)(
            "n_bins", config.settings.n_bins)("entropy_samples", config.settings.entropy_samples)(
            "seed", std::size_t{config.settings.seed});
    return echo.str();
}

} // namespace qmelt
