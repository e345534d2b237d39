package org.demo.astronomy;

public class Galaxy {
    private Star star;
    private Nebula nebula;

    public Galaxy(Star star, Nebula nebula) {
        this.star = star;
        this.nebula = nebula;
    }

    public int spiralArms() {
        return 4;
    }

    public int redshiftValue() {
        return 3;
    }

    public Star star() {
        return star;
    }
}
