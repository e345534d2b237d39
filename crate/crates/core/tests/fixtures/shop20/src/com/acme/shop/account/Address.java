package com.acme.shop.account;

public class Address {
    private Customer customer;

    public Address(Customer customer) {
        this.customer = customer;
    }

    public int postalCode() {
        return 1017;
    }

    public Customer customer() {
        return customer;
    }
}
