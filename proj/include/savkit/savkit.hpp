#ifndef SAVKIT_SAVKIT_HPP
#define SAVKIT_SAVKIT_HPP

#include "savkit/errors.hpp"
#include "savkit/generate.hpp"
#include "savkit/io.hpp"
#include "savkit/oracle.hpp"
#include "savkit/profile.hpp"
#include "savkit/rational.hpp"
#include "savkit/rules.hpp"

#endif  // SAVKIT_SAVKIT_HPP
