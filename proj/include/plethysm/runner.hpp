#ifndef PLETHYSM_RUNNER_HPP_
#define PLETHYSM_RUNNER_HPP_

#include <string>
#include <vector>

#include "fixture.hpp"
#include "zoo.hpp"

namespace plethysm {

  struct RunOptions {
    int           cap          = 2;
    int           nmax         = 2;
    int           isolated_cap = 1;
    Flavor        target       = Flavor::set;
    CospanVariant variant      = CospanVariant::full;
    unsigned      seed         = 1;
    bool          summary      = false;
  };

  //! Exit status: 0 lawful, 1 a law failed, 2 the input was rejected.
  struct RunResult {
    int         status = 0;
    std::string report;
  };

  //! Built-in fixtures by name: cospan, trivial-cospan, surjection, glue,
  //! tau-naturals, tau-symmetric.
  std::vector<std::string> zoo_names();
  Fixture                  zoo_fixture(std::string const& name, RunOptions const& o);

  //! command is one of check, plethysm, extend, correspond, zoo. args are
  //! the positional arguments after it. A fixture argument is a path, a
  //! built-in name, or "-" for stdin_text. Throws Error for rejected
  //! input; law failures come back as status 1.
  RunResult run_command(std::string const&              command,
                        std::vector<std::string> const& args,
                        RunOptions const&               o,
                        std::string const&              stdin_text = "");

}  // namespace plethysm

#endif  // PLETHYSM_RUNNER_HPP_
