#pragma once

#define EXOSC_VERSION "0.1.0"
