#ifndef WDEG_TOOLS_CLI_IO_HPP
#define WDEG_TOOLS_CLI_IO_HPP

#include "wdeg/certificate.hpp"
#include "wdeg/graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wdeg::cli {

// Exit codes, stable across releases.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;
inline constexpr int kResource = 3;
inline constexpr int kInternal = 4;

enum class Format { text, json };

/// Contents of a file, or of stdin for "-". Throws ParseError when unreadable.
std::string read_input(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// Edge-list or DIMACS graph, format detected from the content.
Graph load_graph(const std::string& path);

/// `arg` is an integer (constant weight) or a file of whitespace separated
/// integers, one per vertex.
WeightFn load_weights(const std::string& arg, int n);

/// `arg` is a comma or whitespace separated vertex list, or a file holding one.
VertexSet load_vertex_set(const std::string& arg, int n);

/// The seed given on the command line, or a fresh one from std::random_device.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed);

/// Result of one command. Text mode prints "# ..." headers, then "key: value"
/// lines, then verbatim blocks; JSON mode prints a single object.
class Output
{
public:
    explicit Output(Format format) : format_(format) {}

    void header(const std::string& key, const nlohmann::json& value);
    void field(const std::string& key, const nlohmann::json& value);
    /// Multi-line payload: `text` in text mode, `as_json` under `key` in JSON mode.
    void block(const std::string& key, const std::string& text, nlohmann::json as_json);
    /// Writes to `path`, or stdout when it is empty.
    void flush(const std::string& path) const;

private:
    Format format_;
    std::vector<std::pair<std::string, nlohmann::json>> headers_;
    std::vector<std::pair<std::string, nlohmann::json>> fields_;
    std::vector<std::pair<std::string, std::string>> blocks_;
    nlohmann::json object_ = nlohmann::json::object();
};

/// Runs `body`, turning library exceptions into exit codes with the message on stderr.
int guarded(const std::function<int()>& body);

} // namespace wdeg::cli

#endif
