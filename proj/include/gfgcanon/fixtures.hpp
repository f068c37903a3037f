/* fixtures.hpp -- bundled sample automata used by the test suite and the
 * `fixtures` CLI subcommand. */

#ifndef GFGCANON_FIXTURES_HPP_
#define GFGCANON_FIXTURES_HPP_

#include <string>
#include <vector>

#include "gfgcanon/automaton.hpp"

namespace gfgcanon {

// Known names: fig1a, fig1b, fig2, fig4, fig5c1, fig5c2, fig6d1, fig6d2,
// fig7. Throws std::invalid_argument on anything else.
TncwAutomaton fixture(const std::string& name);

std::vector<std::string> fixture_names();

}  // namespace gfgcanon

#endif  // GFGCANON_FIXTURES_HPP_
