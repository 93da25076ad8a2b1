# setup.py
from setuptools import setup, find_packages

setup(
    name='polyembed',
    version='0.0.1',
    packages=find_packages(exclude=['tests', 'tests.*']),
    install_requires=[
        'numpy',
        'networkx',
        'joblib',
        'matplotlib',
        'python-dateutil',
    ],
    entry_points={
        'console_scripts': ['polyembed=polyembed.cli:main'],
    },
)
