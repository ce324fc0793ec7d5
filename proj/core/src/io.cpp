#include "rigidity/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rigidity {

JsonWriter& JsonWriter::begin_object() {
    prefix();
    out_ += '{';
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    out_ += '}';
    first_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    prefix();
    out_ += '[';
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    out_ += ']';
    first_.pop_back();
    return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
    prefix();
    out_ += '"';
    out_ += k;
    out_ += "\":";
    pending_key_ = true;
    return *this;
}

void JsonWriter::prefix() {
    if (pending_key_) {
        pending_key_ = false;
        return;
    }
    if (!first_.empty()) {
        if (!first_.back()) out_ += ',';
        first_.back() = false;
    }
}

std::string JsonWriter::format_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("json: non-finite number");
    if (x == 0.0) return "0";  // collapse -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

JsonWriter& JsonWriter::value(double x) {
    prefix();
    out_ += format_double(x);
    return *this;
}

JsonWriter& JsonWriter::value(int x) { return value(static_cast<long long>(x)); }

JsonWriter& JsonWriter::value(long long x) {
    prefix();
    out_ += std::to_string(x);
    return *this;
}

JsonWriter& JsonWriter::value(unsigned long long x) {
    prefix();
    out_ += std::to_string(x);
    return *this;
}

JsonWriter& JsonWriter::value(bool b) {
    prefix();
    out_ += b ? "true" : "false";
    return *this;
}

JsonWriter& JsonWriter::value(const std::string& s) {
    prefix();
    out_ += '"';
    for (char c : s) {
        if (c == '"' || c == '\\') { out_ += '\\'; out_ += c; }
        else if (c == '\n') out_ += "\\n";
        else out_ += c;
    }
    out_ += '"';
    return *this;
}

namespace {

nlohmann::json parse(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("json: parse error");
    return j;
}

}  // namespace

Graph graph_from_json(const std::string& text) {
    const nlohmann::json j = parse(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json: need keys \"n\" and \"edges\"");
    if (!j["n"].is_number_integer()) throw std::invalid_argument("graph json: \"n\" must be an integer");
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw std::invalid_argument("graph json: each edge must be a pair of integers");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Graph(j["n"].get<int>(), std::move(edges));
}

WeightFn weights_from_json(const std::string& text) {
    const nlohmann::json j = parse(text);
    if (!j.is_object() || !j.contains("values") || !j["values"].is_array())
        throw std::invalid_argument("weights json: need array key \"values\"");
    std::vector<double> values;
    for (const auto& v : j["values"]) {
        if (!v.is_number()) throw std::invalid_argument("weights json: values must be numbers");
        values.push_back(v.get<double>());
    }
    return WeightFn(std::move(values));
}

Embedding embedding_from_json(const std::string& text) {
    const nlohmann::json j = parse(text);
    if (!j.is_object() || !j.contains("d") || !j.contains("coords") || !j["d"].is_number_integer())
        throw std::invalid_argument("embedding json: need integer \"d\" and array \"coords\"");
    std::vector<std::vector<double>> pts;
    for (const auto& row : j["coords"]) {
        if (!row.is_array()) throw std::invalid_argument("embedding json: coords rows must be arrays");
        std::vector<double> pt;
        for (const auto& x : row) {
            if (!x.is_number()) throw std::invalid_argument("embedding json: coordinates must be numbers");
            pt.push_back(x.get<double>());
        }
        pts.push_back(std::move(pt));
    }
    return Embedding(j["d"].get<int>(), std::move(pts));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

Graph load_graph(const std::string& path) { return graph_from_json(read_file(path)); }
WeightFn load_weights(const std::string& path) { return weights_from_json(read_file(path)); }
Embedding load_embedding(const std::string& path) { return embedding_from_json(read_file(path)); }

std::string to_json(const Graph& g) {
    JsonWriter w;
    w.begin_object().key("n").value(g.vertex_count()).key("edges").begin_array();
    for (const Edge& e : g.edges()) w.begin_array().value(e.u).value(e.v).end_array();
    w.end_array().end_object();
    return w.str();
}

std::string to_json(const WeightFn& f) {
    JsonWriter w;
    w.begin_object().key("values").begin_array();
    for (double x : f.values()) w.value(x);
    w.end_array().end_object();
    return w.str();
}

std::string to_json(const Embedding& p) {
    JsonWriter w;
    w.begin_object().key("d").value(p.dimension()).key("coords").begin_array();
    for (int v = 0; v < p.point_count(); ++v) {
        w.begin_array();
        for (int i = 0; i < p.dimension(); ++i) w.value(p.coord(v, i));
        w.end_array();
    }
    w.end_array().end_object();
    return w.str();
}

std::string to_json(const Spectrum& s) {
    JsonWriter w;
    w.begin_object().key("values").begin_array();
    for (double x : s.values) w.value(x);
    w.end_array().key("tol").value(s.tol).end_object();
    return w.str();
}

std::string to_json(const Matrix& m, const std::vector<std::string>& labels) {
    if (!labels.empty() && labels.size() != m.rows())
        throw std::invalid_argument("matrix json: label count differs from row count");
    JsonWriter w;
    w.begin_object().key("rows").value(static_cast<long long>(m.rows()));
    w.key("cols").value(static_cast<long long>(m.cols()));
    if (!labels.empty()) {
        w.key("labels").begin_array();
        for (const std::string& s : labels) w.value(s);
        w.end_array();
    }
    w.key("data").begin_array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        w.begin_array();
        for (std::size_t c = 0; c < m.cols(); ++c) w.value(m(r, c));
        w.end_array();
    }
    w.end_array().end_object();
    return w.str();
}

std::string to_json(const GapCertificate& cert) {
    char hash_hex[19];
    std::snprintf(hash_hex, sizeof hash_hex, "0x%016llx",
                  static_cast<unsigned long long>(cert.graph_hash));
    JsonWriter w;
    w.begin_object();
    w.key("graph_hash").value(std::string(hash_hex));
    w.key("d").value(cert.dimension);
    w.key("gap").value(cert.gap);
    w.key("embedding");
    w.begin_object().key("d").value(cert.embedding.dimension()).key("coords").begin_array();
    for (int v = 0; v < cert.embedding.point_count(); ++v) {
        w.begin_array();
        for (int i = 0; i < cert.embedding.dimension(); ++i) w.value(cert.embedding.coord(v, i));
        w.end_array();
    }
    w.end_array().end_object();
    w.end_object();
    return w.str();
}

std::string matrix_csv(const Matrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ',';
            out += JsonWriter::format_double(m(r, c));
        }
        out += '\n';
    }
    return out;
}

std::vector<std::string> edge_labels(const Graph& g) {
    std::vector<std::string> labels;
    labels.reserve(g.edges().size());
    for (const Edge& e : g.edges()) labels.push_back(std::to_string(e.u) + "-" + std::to_string(e.v));
    return labels;
}

}  // namespace rigidity
