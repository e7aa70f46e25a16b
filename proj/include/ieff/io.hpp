#ifndef IEFF_IO_HPP
#define IEFF_IO_HPP

#include <string>
#include <vector>

#include "ieff/efficiency.hpp"
#include "ieff/model.hpp"

// Profile document format, DOT serialization and small file helpers.
namespace ieff {

// Thrown for malformed documents; the message carries the offending field
// path. Axiom violations inside an otherwise well-formed document surface as
// ValidationError instead.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A profile plus its display names. Documents are JSON:
//   {
//     "n": 3,
//     "objects": ["a", "b", "c"],
//     "agents": [
//       { "id": 1, "ranking": [["a","c"], ["a","b"], ["b","c"]] },
//       ...
//     ]
//   }
// Each agent lists all n*(n-1)/2 object pairs best-first, every pair oriented
// (preferred, dispreferred), mirroring how intensity tables read top-down.
struct ProfileDocument {
    std::vector<std::string> objects;
    Profile profile;

    friend bool operator==(const ProfileDocument &, const ProfileDocument &) = default;
};

std::vector<std::string> default_object_names(int n);

ProfileDocument parse_profile_document(const std::string &text);
std::string serialize_profile_document(const ProfileDocument &doc);

// Convenience wrappers using default object names.
Profile parse_profile(const std::string &text);
std::string serialize_profile(const Profile &profile);

// DOT rendering of a dominance digraph: nodes and edges in sorted order,
// intensity-efficient nodes drawn with a doubled periphery. Byte-stable for
// a given digraph.
std::string emit_dot(const DominanceDigraph &graph);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

}  // namespace ieff

#endif
