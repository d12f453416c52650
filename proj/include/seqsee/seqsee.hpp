#pragma once

#include "document.hpp"
#include "format.hpp"
#include "ingest.hpp"
#include "layout.hpp"
#include "parse.hpp"
#include "render.hpp"
#include "serialize.hpp"
#include "validate.hpp"
