"""Causal emergence of the which-path and quantum eraser descriptions"""
import logging
import sys
import time

from quantumEmergence.cli import main

###############################################################################

if __name__ == "__main__":
    ###########################################################################
    start_time = time.time()
    ###########################################################################
    exit_code = main(sys.argv[1:])
    ###########################################################################
    finish_time = time.time()
    logging.getLogger("emergence").info(
        "Running time: %.2f [s]", finish_time - start_time
    )
    sys.exit(exit_code)
