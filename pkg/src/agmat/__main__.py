from agmat.cli import main

main()
