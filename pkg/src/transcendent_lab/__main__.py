from .cli import main

main(prog_name="transcendent-lab")
