#include "tropt/semifield.hpp"

namespace tropt {

std::string tag_name(SemifieldTag tag) {
    switch (tag) {
        case SemifieldTag::MaxPlus:  return "max-plus";
        case SemifieldTag::MinPlus:  return "min-plus";
        case SemifieldTag::MaxTimes: return "max-times";
        case SemifieldTag::MinTimes: return "min-times";
    }
    throw InternalError("tag_name: unknown tag");
}

SemifieldTag tag_from_name(const std::string& name) {
    if (name == "max-plus") return SemifieldTag::MaxPlus;
    if (name == "min-plus") return SemifieldTag::MinPlus;
    if (name == "max-times") return SemifieldTag::MaxTimes;
    if (name == "min-times") return SemifieldTag::MinTimes;
    throw ParseError("unknown semifield tag: \"" + name + "\"");
}

} // namespace tropt
