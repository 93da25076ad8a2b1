import sys

sys.path.append(".")

from polyembed.cli import dispatch


def run(argv):
    return dispatch(argv[1:])


if __name__ == "__main__":
    sys.exit(run(sys.argv))
