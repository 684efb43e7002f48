/*
* Property checks for every module, shared by the unit suite and the
* acceptance runner. A check returns an empty string when it holds, otherwise
* a description of the first counterexample.
*/
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace kdfkit::properties {

struct Property {
    std::string module;
    std::string name;
    std::function<std::string()> check;
};

const std::vector<Property>& all();

}  // namespace kdfkit::properties
