#pragma once

#include <string>
#include <vector>

#include "rigidity/embedding.hpp"
#include "rigidity/graph.hpp"
#include "rigidity/matrix.hpp"
#include "rigidity/optimizer.hpp"
#include "rigidity/spectra.hpp"

namespace rigidity {

// Incremental JSON emitter. All doubles are printed with %.17g so reruns
// are byte-identical and values round-trip exactly.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(double x);
    JsonWriter& value(int x);
    JsonWriter& value(long long x);
    JsonWriter& value(unsigned long long x);
    JsonWriter& value(bool b);
    JsonWriter& value(const std::string& s);

    const std::string& str() const { return out_; }

    static std::string format_double(double x);

private:
    void prefix();
    std::string out_;
    std::vector<bool> first_;  // per open container
    bool pending_key_ = false;
};

// Schemas:
//   graph     {"n": int, "edges": [[u, v], ...]}
//   weights   {"values": [w0, ...]}
//   embedding {"d": int, "coords": [[x, y, ...], ...]}
//   spectrum  {"values": [...], "tol": t}
Graph graph_from_json(const std::string& text);
WeightFn weights_from_json(const std::string& text);
Embedding embedding_from_json(const std::string& text);

Graph load_graph(const std::string& path);
WeightFn load_weights(const std::string& path);
Embedding load_embedding(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::string to_json(const Graph& g);
std::string to_json(const WeightFn& f);
std::string to_json(const Embedding& p);
std::string to_json(const Spectrum& s);
std::string to_json(const Matrix& m, const std::vector<std::string>& labels = {});
std::string to_json(const GapCertificate& cert);

// Row-major CSV, one row per line, %.17g entries.
std::string matrix_csv(const Matrix& m);

// "u-v" per edge, in edge order; row/column labels for edge matrices.
std::vector<std::string> edge_labels(const Graph& g);

}  // namespace rigidity
