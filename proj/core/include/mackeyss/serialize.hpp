#pragma once

#include "mackeyss/bredon.hpp"
#include "mackeyss/homalg.hpp"
#include "mackeyss/slice.hpp"

#include <string>
#include <vector>

namespace mss {

// Version of the JSON documents below; bumped on any incompatible change.
inline constexpr int json_schema_version = 1;

// Each function returns a complete document with "schema_version" and "kind".
std::string functor_json(const MackeyFunctor& m, const std::string& name = "");
std::string homology_json(const RepSum& w, const HomologyTable& t);
std::string ext_json(const std::string& source, const std::string& target, int n, const std::vector<ExtResult>& ext);
std::string page_json(const Page& p);
std::string pi3_json(const Pi3Result& r);

}  // namespace mss
