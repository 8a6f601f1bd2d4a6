#ifndef RIGIKIT_IO_HPP
#define RIGIKIT_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "rigikit/graph.hpp"

namespace rigikit {

// Thrown on malformed input; the CLI maps it to exit code 1 with the line
// diagnostics in the message.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph text format: first line "n m", then m lines "u v" (0-based);
// multigraphs repeat lines. JSON format:
//   {"n": int, "edges": [[u,v], ...], "multi": bool}
// The format is detected from the first non-space character.
Multigraph parse_multigraph(const std::string& text);
Multigraph parse_multigraph_stream(std::istream& in);
Multigraph load_multigraph(const std::string& path_or_dash);

// Rejects parallel edges loudly rather than simplifying them.
SimpleGraph require_simple(const Multigraph& h);

std::string to_text_format(const Multigraph& h);
nlohmann::json multigraph_json(const Multigraph& h);

} // namespace rigikit

#endif
