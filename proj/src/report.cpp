#include "updown/report.hpp"

#include <sstream>

namespace updown {

nlohmann::ordered_json report_json(const Square& sq, const PropertyReport& rep) {
    nlohmann::ordered_json j;
    j["order"] = sq.order;
    j["width"] = sq.width;
    j["alphabet"] = sq.alphabet.digits();
    j["s1"] = rep.s1 ? nlohmann::ordered_json(*rep.s1) : nlohmann::ordered_json(nullptr);
    j["s2"] = rep.s2 ? nlohmann::ordered_json(*rep.s2) : nlohmann::ordered_json(nullptr);
    nlohmann::ordered_json flags;
    flags["semi_magic"] = rep.semi_magic;
    flags["magic"] = rep.magic;
    flags["bimagic"] = rep.bimagic;
    flags["block_magic"] = rep.block_magic;
    flags["pandiagonal"] = rep.pandiagonal;
    flags["balanced"] = rep.balanced;
    flags["pair_orthogonal"] = rep.pair_orthogonal;
    flags["upside_down_closed"] = rep.upside_down_closed;
    flags["universal"] = rep.universal;
    flags["combination_complete"] = rep.combination_complete;
    j["flags"] = flags;
    try {
        const SumPair want = expected_sums(sq.alphabet, sq.width, sq.order);
        j["expected"] = {{"s1", want.s1}, {"s2", want.s2}};
    } catch (const Error&) {
        j["expected"] = nullptr;
    }
    if (rep.rotated_sums) {
        nlohmann::ordered_json rot;
        rot["s1"] = rep.rotated_sums->s1 ? nlohmann::ordered_json(*rep.rotated_sums->s1)
                                         : nlohmann::ordered_json(nullptr);
        rot["s2"] = rep.rotated_sums->s2 ? nlohmann::ordered_json(*rep.rotated_sums->s2)
                                         : nlohmann::ordered_json(nullptr);
        j["rotated"] = rot;
    } else {
        j["rotated"] = nullptr;
    }
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : rep.failures) {
        nlohmann::ordered_json jf;
        jf["family"] = f.family;
        jf["index"] = f.index;
        jf["s1"] = f.s1;
        jf["s2"] = f.s2;
        j["failures"].push_back(jf);
    }
    return j;
}

std::string report_text(const Square& sq, const PropertyReport& rep) {
    std::ostringstream os;
    os << "order:                " << sq.order << "\n";
    os << "width:                " << sq.width << "\n";
    os << "alphabet:             " << sq.alphabet.digits() << "\n";
    os << "s1:                   " << (rep.s1 ? std::to_string(*rep.s1) : "-") << "\n";
    os << "s2:                   " << (rep.s2 ? std::to_string(*rep.s2) : "-") << "\n";
    auto flag = [&](const char* name, bool v) {
        os << name << (v ? "yes" : "no") << "\n";
    };
    flag("semi_magic:           ", rep.semi_magic);
    flag("magic:                ", rep.magic);
    flag("bimagic:              ", rep.bimagic);
    flag("block_magic:          ", rep.block_magic);
    flag("pandiagonal:          ", rep.pandiagonal);
    flag("balanced:             ", rep.balanced);
    flag("pair_orthogonal:      ", rep.pair_orthogonal);
    flag("upside_down_closed:   ", rep.upside_down_closed);
    flag("universal:            ", rep.universal);
    flag("combination_complete: ", rep.combination_complete);
    if (rep.rotated_sums) {
        os << "rotated s1:           "
           << (rep.rotated_sums->s1 ? std::to_string(*rep.rotated_sums->s1) : "-") << "\n";
        os << "rotated s2:           "
           << (rep.rotated_sums->s2 ? std::to_string(*rep.rotated_sums->s2) : "-") << "\n";
    }
    if (!rep.rotation_note.empty()) os << "rotation:             " << rep.rotation_note << "\n";
    if (!rep.mirror_note.empty()) os << "mirror:               " << rep.mirror_note << "\n";
    if (rep.failures.empty()) {
        os << "failures:             none\n";
    } else {
        os << "failures:\n";
        for (const auto& f : rep.failures) {
            os << "  " << f.family << "[" << f.index << "] s1=" << f.s1 << " s2=" << f.s2 << "\n";
        }
    }
    return os.str();
}

}  // namespace updown
