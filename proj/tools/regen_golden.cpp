// Regenerates the golden corpus from its constructors.  The files are
// committed; the verification suite asserts they match this output byte for
// byte, so running this tool is only needed when a constructor changes on
// purpose.

#include "mubar/braid.hpp"
#include "mubar/link.hpp"
#include "mubar/link_io.hpp"
#include "mubar/operators.hpp"
#include "mubar/pd_code.hpp"

#include <cstdio>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

int main(int argc, char** argv) {
    using namespace mubar;
    const std::string dir = argc > 1 ? argv[1] : "golden";
    std::filesystem::create_directories(dir);

    const BraidWord br = BraidWord::parse("s2 s1^-1 s2 s1^-1 s2 s1^-1", 3);
    const BraidWord hopf(2, {1, 1});

    std::vector<std::pair<std::string, Link>> files;
    files.emplace_back("br.braid", Link(br));
    files.emplace_back("br.pd", Link(closure_diagram(br).relabeled_sequential()));
    files.emplace_back("hopf.pd", Link(closure_diagram(hopf).relabeled_sequential()));
    files.emplace_back("unlink2.pd", Link(PDCode({}, {{1}, {2}})));
    files.emplace_back("unlink3.pd", Link(PDCode({}, {{1}, {2}, {3}})));
    files.emplace_back("commutator.braid", Link(braid_commutator_link()));
    files.emplace_back("whitehead.pd", Link(twisted_whitehead(1).relabeled_sequential()));
    for (int t : {2, 4, 6})
        files.emplace_back("twisted-whitehead-" + std::to_string(t) + ".pd",
                           Link(twisted_whitehead(t).relabeled_sequential()));
    files.emplace_back("bd-hopf.pd",
                       Link(bing_double(closure_diagram(hopf)).relabeled_sequential()));
    files.emplace_back("bd-br.pd", Link(bing_double(closure_diagram(br)).relabeled_sequential()));

    for (const auto& [name, link] : files) {
        const std::string path = dir + "/" + name;
        save_link(link, path);
        std::printf("wrote %s (%d components)\n", path.c_str(), link.component_count());
    }
    return 0;
}
