from setuptools import setup


with open("README.md", encoding='utf-8') as fh:
    long_description = fh.read()

with open("requirements.txt", encoding='utf-8') as fh:
    install_requires = fh.read()

NAME = "tamaricc"
VERSION = "0.1.0"

setup(
    name=NAME,
    version=VERSION,
    description="Cubic coordinates of Tamari intervals",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=["tamaricc"],
    package_data={
        'tamaricc': ['py.typed'],
    },
    install_requires=install_requires,
    extras_require={
        'test': ['pytest>=7.0', 'hypothesis>=6.0'],
    },
    entry_points={
        'console_scripts': ['tamaricc = tamaricc.cli:main'],
    },
    python_requires=">=3.10",
    zip_safe=False,
    classifiers=[
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
