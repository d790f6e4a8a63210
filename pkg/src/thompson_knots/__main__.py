"""python -m thompson_knots"""

from .main import main

main()
