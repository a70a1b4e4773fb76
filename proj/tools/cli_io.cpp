#include "cli_io.hpp"

#include "wdeg/errors.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace wdeg::cli {

using nlohmann::json;

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read '" + path + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw ParseError("cannot write '" + path + "'", 0);
}

Graph load_graph(const std::string& path)
{
    const auto text = read_input(path);
    return parse_graph(text, detect_format(text));
}

namespace {

std::optional<long long> as_integer(const std::string& s)
{
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty())
        return std::nullopt;
    return v;
}

std::vector<long long> integers(const std::string& text, const std::string& what)
{
    std::string norm = text;
    for (char& ch : norm)
        if (ch == ',')
            ch = ' ';
    std::istringstream in(norm);
    std::vector<long long> out;
    std::string tok;
    while (in >> tok) {
        auto v = as_integer(tok);
        if (!v)
            throw ParseError(what + ": '" + tok + "' is not an integer", 0);
        out.push_back(*v);
    }
    return out;
}

bool looks_inline(const std::string& arg)
{
    return arg.find_first_not_of("0123456789-, ") == std::string::npos;
}

} // namespace

WeightFn load_weights(const std::string& arg, int n)
{
    if (auto v = as_integer(arg))
        return constant_f(n, static_cast<int>(*v));
    auto vals = integers(read_input(arg), "weight file");
    if (static_cast<int>(vals.size()) != n)
        throw StructuralError("weight file has " + std::to_string(vals.size()) +
                              " entries for a graph on " + std::to_string(n) + " vertices");
    return WeightFn(vals.begin(), vals.end());
}

VertexSet load_vertex_set(const std::string& arg, int n)
{
    auto vals = integers(looks_inline(arg) ? arg : read_input(arg), "vertex set");
    VertexSet s(n);
    for (long long v : vals) {
        if (v < 0 || v >= n)
            throw StructuralError("vertex " + std::to_string(v) + " out of range");
        s.insert(static_cast<Vertex>(v));
    }
    return s;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed)
{
    if (seed)
        return *seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void Output::header(const std::string& key, const json& value)
{
    headers_.emplace_back(key, value);
    object_[key] = value;
}

void Output::field(const std::string& key, const json& value)
{
    fields_.emplace_back(key, value);
    object_[key] = value;
}

void Output::block(const std::string& key, const std::string& text, json as_json)
{
    blocks_.emplace_back(key, text);
    object_[key] = std::move(as_json);
}

namespace {

std::string plain(const json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v)
            s += (s.empty() ? "" : " ") + plain(x);
        return s;
    }
    return v.dump();
}

} // namespace

void Output::flush(const std::string& path) const
{
    std::ostringstream out;
    if (format_ == Format::json) {
        out << object_.dump(2) << "\n";
    } else {
        for (const auto& [k, v] : headers_)
            out << "# " << k << ": " << plain(v) << "\n";
        for (const auto& [k, v] : fields_)
            out << k << ": " << plain(v) << "\n";
        for (const auto& [k, text] : blocks_) {
            out << "[" << k << "]\n" << text;
            if (!text.empty() && text.back() != '\n')
                out << "\n";
        }
    }
    if (path.empty())
        std::cout << out.str() << std::flush;
    else
        write_file(path, out.str());
}

int guarded(const std::function<int()>& body)
{
    try {
        return body();
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

} // namespace wdeg::cli
