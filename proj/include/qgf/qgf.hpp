#ifndef QGF_QGF_HPP
#define QGF_QGF_HPP

#include "qgf/antilinear.hpp"
#include "qgf/azb.hpp"
#include "qgf/commands.hpp"
#include "qgf/crossed.hpp"
#include "qgf/frame.hpp"
#include "qgf/functional.hpp"
#include "qgf/group.hpp"
#include "qgf/io.hpp"
#include "qgf/layout.hpp"
#include "qgf/mult_unitary.hpp"
#include "qgf/operator.hpp"
#include "qgf/operator_space.hpp"
#include "qgf/report.hpp"
#include "qgf/rng.hpp"

#endif
